#!/usr/bin/env python3
"""Regenerate the bundled desk-scale sample data under src/punsocial/data/.

Everything is derived deterministically from fixed seeds and the literal word
lists below, so rerunning the script reproduces the shipped files byte for
byte. The embedding file is synthetic: food vocabulary (and regular plurals)
cluster around the "food" anchor vector, everything else is isotropic noise.
"""

from __future__ import annotations

import sys
from pathlib import Path

import numpy as np

REPO = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(REPO / "src"))

from punsocial.phonetics import CONSONANT_SYMBOLS, VOWEL_SYMBOLS, fallback_transcription
from punsocial.textdata import inflect, pluralize

DATA_DIR = REPO / "src" / "punsocial" / "data"

SEED_EMBEDDINGS = 20240801
SEED_COMMENTS = 20240802

# --------------------------------------------------------------------------
# Food vocabulary (500 nouns). Words needed by tests and docs come first so
# trimming the tail can never drop them.
# --------------------------------------------------------------------------

FOOD_WORDS = """
beet bacon kimchi marshmallow cherry onion pepperoni avocado lasagna chicken
brewery kebab beef noodle waffle pickle taco nacho burrito pretzel
apple apricot banana blackberry blueberry boysenberry breadfruit cantaloupe citron clementine
coconut cranberry currant date durian elderberry fig grape grapefruit guava
honeydew jackfruit jujube kiwi kumquat lemon lime lychee mango melon
mulberry nectarine olive orange papaya peach pear persimmon pineapple plantain
plum pomegranate pomelo prune quince raisin raspberry rhubarb strawberry tamarind
tangerine watermelon gooseberry starfruit artichoke arugula asparagus bean broccoli cabbage
carrot cauliflower celery chard chickpea chili chive collard corn cress
cucumber eggplant endive fennel garlic gherkin gourd kale leek lentil
lettuce mushroom okra parsnip pea pepper potato pumpkin radicchio radish
rutabaga scallion shallot soybean spinach sprout squash tomatillo tomato turnip
yam zucchini watercress kohlrabi cassava taro jicama anise basil caraway
cardamom cayenne chicory cilantro cinnamon clove coriander cumin dill ginger
ginseng horseradish juniper lavender lemongrass licorice mace marjoram mint mustard
nutmeg oregano paprika parsley peppercorn peppermint rosemary saffron sage sassafras
sesame sorrel spearmint tarragon thyme turmeric vanilla wasabi allspice fenugreek
almond amaranth barley bran buckwheat bulgur cashew chestnut couscous farro
flaxseed granola hazelnut hominy macadamia millet muesli oat oatmeal peanut
pecan pistachio quinoa rice rye semolina sorghum spelt walnut wheat
cornmeal polenta grits tapioca brie brisket burger butter buttermilk camembert
cheddar cheese chorizo clam cod crab cream curd custard duck
egg feta fish gouda goose ham hamburger herring jerky kefir
lamb lobster loin meat meatball meatloaf milk mozzarella mussel mutton
oyster parmesan pastrami pork poultry prawn prosciutto provolone quail salami
salmon sardine sausage scallop shrimp sirloin snapper steak tilapia tofu
trout tuna turkey veal venison whey yogurt anchovy bagel baguette
biscuit bisque borscht bread brioche broth brownie bruschetta calzone casserole
ceviche chowder ciabatta cobbler coleslaw compote cookie cornbread crepe croissant
croquette crouton cupcake curry doughnut dumpling empanada enchilada falafel fajita
flapjack focaccia fondue frittata fritter gazpacho gnocchi goulash gravy gruel
guacamole gumbo gyro hash hummus jambalaya ketchup goulash lasagne linguine
macaroni marinara muffin omelet paella pancake panini pasta pastry patty
penne pesto pie pilaf pita pizza porridge quesadilla quiche ragout
ramen ravioli risotto roll salad salsa samosa sandwich sashimi sauerkraut
schnitzel scone soup spaghetti stew strudel sushi tamale tart tempura
teriyaki toast tortellini tortilla wonton wrap flatbread shawarma pierogi bibimbap
congee laksa pho ratatouille moussaka paneer naan chapati dosa butterscotch
cake candy caramel cheesecake chocolate churro cocoa confection cracker crumble
eclair fudge gelatin gelato gingerbread gumdrop honey icing jam jelly
jellybean lollipop macaroon marmalade marzipan meringue milkshake mousse nougat parfait
popsicle praline pudding shortbread shortcake sherbet sorbet sugar sundae syrup
taffy tiramisu toffee torte treacle trifle truffle wafer donut molasses
brittle bonbon biscotti cannoli baklava flan ale beer beverage bourbon
brandy brew cappuccino chai champagne cocktail coffee cognac cola cordial
daiquiri eggnog espresso gin juice julep kombucha lager latte lemonade
limeade liqueur liquor margarita martini mead mocha mojito nectar porter
punch rum sake sangria schnapps scotch seltzer shake sherry smoothie
soda stout tea tequila tonic vodka whiskey wine spritzer absinthe
amaretto mimosa negroni batter bouillon breadcrumb brine cornstarch dough dressing
fillet flour garnish glaze gluten lard loaf marinade mayo mayonnaise
morsel oil puree relish rind roux salt seasoning shortening snack
starch stock suet tahini vinegar yeast zest aioli chutney sriracha
tzatziki miso dashi nori seaweed kelp caviar roe gruyere edam
ricotta mascarpone halloumi manchego feast nibble morsel mocha sundae praline
""".split()

# --------------------------------------------------------------------------
# Movie titles: (title, votes). The default filter (>= 100000 votes, >= 2
# words) keeps exactly the first 50 rows.
# --------------------------------------------------------------------------

KEPT_TITLES = [
    "the butterfly effect",
    "beauty and the beast",
    "how to train your dragon",
    "under the skin",
    "fantastic beasts and where to find them",
    "the lord of the rings",
    "the silence of the lambs",
    "saving private ryan",
    "the dark knight",
    "pulp fiction",
    "the shawshank redemption",
    "forrest gump",
    "fight club",
    "the matrix",
    "the godfather",
    "a beautiful mind",
    "the green mile",
    "the sixth sense",
    "good will hunting",
    "the usual suspects",
    "american history x",
    "the prestige",
    "the departed",
    "no country for old men",
    "there will be blood",
    "the big lebowski",
    "donnie darko",
    "requiem for a dream",
    "the truman show",
    "catch me if you can",
    "shutter island",
    "the wolf of wall street",
    "django unchained",
    "inglourious basterds",
    "mad max fury road",
    "the grand budapest hotel",
    "gone girl",
    "the social network",
    "dead poets society",
    "groundhog day",
    "the princess bride",
    "back to the future",
    "raiders of the lost ark",
    "the empire strikes back",
    "blade runner",
    "the terminator",
    "jurassic park",
    "the lion king",
    "finding nemo",
    "toy story",
]

ONE_WORD_TITLES = [
    "up", "jaws", "alien", "gladiator", "braveheart", "titanic",
    "casablanca", "psycho", "vertigo", "rocky",
]

LOW_VOTE_TITLES = [
    "the quiet harbor", "a winter ledger", "paper lantern nights",
    "the ninth parallel", "salt of the valley", "the cartographers union",
    "midnight freight", "the glass orchard",
]

# Function words and non-noun title vocabulary; everything else defaults to
# noun via the lexicon fallback.
POS_OVERRIDES = {
    "the": "other", "a": "other", "an": "other", "and": "other", "of": "other",
    "to": "other", "in": "other", "for": "other", "by": "other", "with": "other",
    "on": "other", "at": "other", "your": "other", "where": "other", "them": "other",
    "there": "other", "will": "other", "be": "other", "no": "other", "me": "other",
    "if": "other", "you": "other", "can": "other", "how": "other", "under": "other",
    "back": "other", "up": "other", "x": "other",
    "train": "verb", "find": "verb", "saving": "verb", "hunting": "verb",
    "finding": "verb", "strikes": "verb", "gone": "verb", "catch": "verb",
    "fantastic": "adj", "dark": "adj", "beautiful": "adj", "green": "adj",
    "sixth": "adj", "good": "adj", "usual": "adj", "american": "adj",
    "big": "adj", "old": "adj", "dead": "adj", "grand": "adj", "social": "adj",
    "mad": "adj", "lost": "adj", "quiet": "adj", "ninth": "adj", "glass": "adj",
    "private": "adj",
}

# Hand-checked ARPABET pronunciations (stress omitted) for the words whose
# phonetics the tests and docs lean on; the rule fallback fills in the rest.
HAND_PRONUNCIATIONS = {
    "beast": "B IY S T",
    "beet": "B IY T",
    "beets": "B IY T S",
    "beauty": "B Y UW T IY",
    "butterfly": "B AH T ER F L AY",
    "effect": "IH F EH K T",
    "hallows": "HH AE L OW Z",
    "marshmallow": "M AA R SH M EH L OW",
    "marshmallows": "M AA R SH M EH L OW Z",
    "kimchi": "K IH M CH IY",
    "bacon": "B EY K AH N",
    "brewery": "B R UW ER IY",
    "dragon": "D R AE G AH N",
    "train": "T R EY N",
    "chicken": "CH IH K AH N",
    "pepperoni": "P EH P ER OW N IY",
    "avocado": "AE V AH K AA D OW",
    "lasagna": "L AH Z AA N Y AH",
    "onion": "AH N Y AH N",
    "cherry": "CH EH R IY",
    "cherries": "CH EH R IY Z",
    "beasts": "B IY S T S",
    "skin": "S K IH N",
    "lord": "L AO R D",
    "rings": "R IH NG Z",
    "silence": "S AY L AH N S",
    "lambs": "L AE M Z",
    "knight": "N AY T",
    "fiction": "F IH K SH AH N",
    "redemption": "R IH D EH M P SH AH N",
    "club": "K L AH B",
    "matrix": "M EY T R IH K S",
    "godfather": "G AA D F AA DH ER",
    "mind": "M AY N D",
    "mile": "M AY L",
    "sense": "S EH N S",
    "suspects": "S AH S P EH K T S",
    "history": "HH IH S T ER IY",
    "prestige": "P R EH S T IY ZH",
    "country": "K AH N T R IY",
    "blood": "B L AH D",
    "dream": "D R IY M",
    "show": "SH OW",
    "island": "AY L AH N D",
    "wolf": "W UH L F",
    "wall": "W AO L",
    "street": "S T R IY T",
    "fury": "F Y UH R IY",
    "road": "R OW D",
    "hotel": "HH OW T EH L",
    "girl": "G ER L",
    "network": "N EH T W ER K",
    "poets": "P OW AH T S",
    "society": "S AH S AY AH T IY",
    "day": "D EY",
    "princess": "P R IH N S EH S",
    "bride": "B R AY D",
    "future": "F Y UW CH ER",
    "raiders": "R EY D ER Z",
    "ark": "AA R K",
    "empire": "EH M P AY ER",
    "blade": "B L EY D",
    "runner": "R AH N ER",
    "terminator": "T ER M AH N EY T ER",
    "park": "P AA R K",
    "lion": "L AY AH N",
    "king": "K IH NG",
    "nemo": "N IY M OW",
    "toy": "T OY",
    "story": "S T AO R IY",
    "cheese": "CH IY Z",
    "cheeses": "CH IY Z IH Z",
    "grape": "G R EY P",
    "grapes": "G R EY P S",
    "steak": "S T EY K",
    "steaks": "S T EY K S",
    "bean": "B IY N",
    "beans": "B IY N Z",
    "bread": "B R EH D",
    "breads": "B R EH D Z",
    "rice": "R AY S",
    "noodle": "N UW D AH L",
    "noodles": "N UW D AH L Z",
    "waffle": "W AA F AH L",
    "waffles": "W AA F AH L Z",
    "pickle": "P IH K AH L",
    "pickles": "P IH K AH L Z",
    "taco": "T AA K OW",
    "tacos": "T AA K OW Z",
    "kebab": "K AH B AA B",
    "kebabs": "K AH B AA B Z",
    "pretzel": "P R EH T S AH L",
    "pretzels": "P R EH T S AH L Z",
    "salad": "S AE L AH D",
    "salads": "S AE L AH D Z",
    "soup": "S UW P",
    "soups": "S UW P S",
    "toast": "T OW S T",
    "butter": "B AH T ER",
    "sugar": "SH UH G ER",
    "honey": "HH AH N IY",
    "pizza": "P IY T S AH",
    "pizzas": "P IY T S AH Z",
    "pasta": "P AA S T AH",
    "pastas": "P AA S T AH Z",
    "burger": "B ER G ER",
    "burgers": "B ER G ER Z",
    "fries": "F R AY Z",
    "gravy": "G R EY V IY",
    "biscuit": "B IH S K AH T",
    "biscuits": "B IH S K AH T S",
    "muffin": "M AH F AH N",
    "muffins": "M AH F AH N Z",
    "bagel": "B EY G AH L",
    "bagels": "B EY G AH L Z",
    "coffee": "K AA F IY",
    "tea": "T IY",
    "wine": "W AY N",
    "beer": "B IH R",
    "juice": "JH UW S",
    "milk": "M IH L K",
    "egg": "EH G",
    "eggs": "EH G Z",
    "ham": "HH AE M",
    "pork": "P AO R K",
    "beef": "B IY F",
    "fish": "F IH SH",
    "salmon": "S AE M AH N",
    "shrimp": "SH R IH M P",
    "lemon": "L EH M AH N",
    "lemons": "L EH M AH N Z",
    "lime": "L AY M",
    "limes": "L AY M Z",
    "mango": "M AE NG G OW",
    "mangos": "M AE NG G OW Z",
    "peach": "P IY CH",
    "peaches": "P IY CH IH Z",
    "pear": "P EH R",
    "pears": "P EH R Z",
    "plum": "P L AH M",
    "plums": "P L AH M Z",
    "berry": "B EH R IY",
    "berries": "B EH R IY Z",
    "apple": "AE P AH L",
    "apples": "AE P AH L Z",
    "banana": "B AH N AE N AH",
    "bananas": "B AH N AE N AH Z",
    "carrot": "K AE R AH T",
    "carrots": "K AE R AH T S",
    "potato": "P AH T EY T OW",
    "potatoes": "P AH T EY T OW Z",
    "tomato": "T AH M EY T OW",
    "tomatoes": "T AH M EY T OW Z",
    "onions": "AH N Y AH N Z",
    "garlic": "G AA R L IH K",
    "basil": "B EY Z AH L",
    "ginger": "JH IH N JH ER",
    "butterscotch": "B AH T ER S K AA CH",
    "caramel": "K EH R AH M AH L",
    "chocolate": "CH AO K L AH T",
    "vanilla": "V AH N IH L AH",
    "pudding": "P UH D IH NG",
    "custard": "K AH S T ER D",
    "sundae": "S AH N D EY",
    "syrup": "S IH R AH P",
    "jelly": "JH EH L IY",
    "jam": "JH AE M",
    "cookie": "K UH K IY",
    "cookies": "K UH K IY Z",
    "cake": "K EY K",
    "cakes": "K EY K S",
    "pie": "P AY",
    "pies": "P AY Z",
    "brownie": "B R AW N IY",
    "brownies": "B R AW N IY Z",
    "dumpling": "D AH M P L IH NG",
    "dumplings": "D AH M P L IH NG Z",
    "sausage": "S AO S IH JH",
    "sausages": "S AO S IH JH IH Z",
    "mushroom": "M AH SH R UW M",
    "mushrooms": "M AH SH R UW M Z",
    "spinach": "S P IH N AH CH",
    "turkey": "T ER K IY",
    "turkeys": "T ER K IY Z",
    "lobster": "L AA B S T ER",
    "lobsters": "L AA B S T ER Z",
    "oyster": "OY S T ER",
    "oysters": "OY S T ER Z",
    "thyme": "TH AY M",
    "thymes": "TH AY M Z",
    "rye": "R AY",
    "ryes": "R AY Z",
}

# Raw comments that should never match any title.
NOISE_COMMENTS = [
    "totally unrelated rant text here",
    "I just love scrolling through these posts all day long honestly",
    "follow me for more amazing content #follow #like #subscribe",
    "@admin when is the next giveaway happening???",
    "this reminds me of my trip to the mountains last summer, unforgettable views",
    "why is nobody talking about the weather today",
    "first!!! #first @everyone",
    "lol",
    "my cat walked across the keyboard qwertyuiop",
    "does anyone know a good recipe for banana bread without sugar",
]


def build_vocab() -> tuple[list[str], list[str], set[str]]:
    """(food words, all titles, food-cluster vocabulary)."""
    food = []
    seen = set()
    for word in FOOD_WORDS:
        if word not in seen:
            seen.add(word)
            food.append(word)
    assert len(food) >= 500, f"only {len(food)} distinct food words"
    food = food[:500]
    titles = KEPT_TITLES + ONE_WORD_TITLES + LOW_VOTE_TITLES
    cluster = set(food) | {pluralize(w) for w in food} | {"brewery", "breweries"}
    return food, titles, cluster


COMMON_WORDS = """
time year people way day man thing woman life child world school state family
student group problem hand part place case week company system program question
work government number night point home water room mother area money story fact
month lot right study book eye job word business issue side kind head house
service friend father power hour game line end member law car city community
name president team minute idea body information back parent face others level
office door health person art war party result change morning reason research
moment air teacher force education foot boy age policy process music market
sense nation plan college interest death experience effect use class control
care field development role effort rate heart drug leader light voice wife
whole police mind price report decision son view relationship town road arm
difference value building action model season play type paper space ground
form event official matter center couple site project activity star table need
court produce american oil situation cost industry figure course economy
even help line love support technology wall wind window wish wood worker
writer yard yesterday zone carburetor gasket flywheel sprocket manifold
afternoon airport album alley anchor angle animal answer antenna anthem
apartment archive arena arrow artist asphalt athlete atlas audience author
autumn avenue balance balcony ballot banner barrel basement basket battle
beach bell belt bench bicycle billboard binder blanket blueprint boulder
boundary breeze brick bridge briefcase broom brush bucket budget bulb
bullet bundle bureau bus button cabin cable cactus calendar camera
canal candle canvas canyon captain carbon career cargo carpet cartoon
castle ceiling cellar cement census chain chair chalk chamber channel
chapter charity chart chess chimney circle circus citizen clay cliff
clinic clock cloud coach coast coil coin collar column comet compass
computer concert concrete conference congress contest contract copper corner
corridor cottage cotton council county cousin crane crater crayon credit
crescent cricket crystal culture current curtain cushion cycle dairy dance
deck degree delta desert design desk detail device diagram diamond
diary dinner diploma direction disc distance district ditch dock doctor
document dollar dolphin domain donkey draft drain drawer drill driver
drum dust duty eagle earth echo edge editor elbow election
element elephant elevator engine entrance envelope equator error escape estate
evening exam example exit fabric factory falcon fence ferry fever
fiber file film filter finger flag flame flash fleet floor
fog forest fork fort fountain frame freedom frost furnace galaxy
gallery garage garden gate gear generator giant glacier globe glove
goal granite graph grass gravel grid guard guitar hall hammer
harbor harvest hat hawk hazard helmet hill hinge hobby hockey
hole hook horizon horn horse hospital hunter ice inch index
ink insect iron ivory jacket jail jewel journal judge jungle
keyboard kid knee knife ladder lake lamp land lane language
lantern laser lawyer leather ledge legend lens letter library
lid lighthouse lightning lily limb limit lobby lock locomotive log
luggage lumber machine magazine magnet mailbox mansion map marble margin
mask mast mattress meadow medal media metal meteor meter mill
mirror missile mission mist monitor monument moon motor mountain mouse
museum nail needle nest net news notebook novel nurse
ocean opera orbit orchard organ outlet oven owl oxygen package
paint palace panel parade parcel pardon parent parlor passage patent
path patio pattern pedal pen pencil pillar pillow pilot pine
pipe piston pitch planet plank plastic platform plaza pliers plow
pocket poem pole pond porch port portrait poster pottery powder
prairie press printer prison prize propeller pulley pump puzzle pyramid
quarry quartz rack radar radio raft rail railway ranch ridge
rifle ring river robot rocket roof rope rubber rug ruler
saddle sail sand satellite scale scarf scene schedule
screen screw sculpture seal seat sector sentence shadow shaft shelf
shell shield ship shoulder shovel sidewalk signal silver siren skeleton
sketch ski sky slope socket soil soldier sonnet spark spear
sphere spring stable stadium stage stairs stamp statue steel stem
stone stove stream string studio subway summit surface swamp sword
tank target taxi telescope temple tent theater thread throne thunder
ticket tide timber tire tissue tool torch tower tractor traffic
trail tunnel turbine tweed umbrella uniform valley valve vault vehicle
vessel village violin volcano wagon wallet warehouse watch wave weather
wheel whistle winter wire witness workshop
""".split()


def write_food(food: list[str]) -> None:
    (DATA_DIR / "food_words.txt").write_text("\n".join(food) + "\n", encoding="utf-8")


def write_pos(food: list[str], titles: list[str]) -> None:
    entries: dict[str, str] = {}
    for word in food:
        entries[word] = "noun"
    for title in titles:
        for word in title.split():
            if word in entries:
                continue
            entries[word] = POS_OVERRIDES.get(word, "noun")
    for word, tag in POS_OVERRIDES.items():
        entries.setdefault(word, tag)
    lines = [f"{word}\t{tag}" for word, tag in sorted(entries.items())]
    (DATA_DIR / "pos_lexicon.tsv").write_text("\n".join(lines) + "\n", encoding="utf-8")


def write_titles() -> None:
    rng = np.random.default_rng(7)
    rows = []
    for title in KEPT_TITLES:
        rows.append((title, int(rng.integers(120_000, 2_400_000))))
    for title in ONE_WORD_TITLES:
        rows.append((title, int(rng.integers(150_000, 1_200_000))))
    for title in LOW_VOTE_TITLES:
        rows.append((title, int(rng.integers(200, 90_000))))
    lines = [f"{title}\t{votes}" for title, votes in rows]
    (DATA_DIR / "titles.tsv").write_text("\n".join(lines) + "\n", encoding="utf-8")


def write_pronunciations(food: list[str], titles: list[str]) -> None:
    words = set(HAND_PRONUNCIATIONS)
    for word in food:
        words.add(word)
        words.add(pluralize(word))
    for title in titles:
        words.update(title.split())
    lines = []
    for word in sorted(words):
        phones = HAND_PRONUNCIATIONS.get(word) or " ".join(fallback_transcription(word))
        lines.append(f"{word}\t{phones}")
    (DATA_DIR / "pronunciations.tsv").write_text("\n".join(lines) + "\n", encoding="utf-8")


def write_inventory() -> None:
    lines = [f"{symbol}\tvowel" for symbol in sorted(VOWEL_SYMBOLS)]
    lines += [f"{symbol}\tconsonant" for symbol in sorted(CONSONANT_SYMBOLS)]
    (DATA_DIR / "phoneme_inventory.tsv").write_text("\n".join(lines) + "\n", encoding="utf-8")


def write_embeddings(food: list[str], titles: list[str], cluster: set[str]) -> None:
    vocab: list[str] = ["food"]
    seen = {"food"}

    def add(word: str) -> None:
        if word and word not in seen:
            seen.add(word)
            vocab.append(word)

    for word in food:
        add(word)
        add(pluralize(word))
    add("breweries")
    for title in titles:
        for word in title.split():
            add(word)
    for word in COMMON_WORDS:
        add(word)
    for word in COMMON_WORDS:
        add(pluralize(word))
        if len(vocab) >= 2200:
            break

    assert len(vocab) >= 2000, f"vocabulary too small: {len(vocab)}"
    vocab = vocab[:2000]

    rng = np.random.default_rng(SEED_EMBEDDINGS)
    dim = 50
    anchor = rng.normal(size=dim)
    anchor /= np.linalg.norm(anchor)

    lines = []
    for word in vocab:
        if word == "food":
            vec = anchor
        elif word in cluster:
            noise = rng.normal(size=dim)
            noise /= np.linalg.norm(noise)
            spread = rng.uniform(0.25, 0.65)
            vec = anchor + spread * noise
            vec /= np.linalg.norm(vec)
        else:
            vec = rng.normal(size=dim)
            vec /= np.linalg.norm(vec)
        values = " ".join(f"{v:.6f}" for v in vec)
        lines.append(f"{word} {values}")
    (DATA_DIR / "embeddings_50d.txt").write_text("\n".join(lines) + "\n", encoding="utf-8")

    # Sanity anchors promised in the docs: bacon beats carburetor on food-ness.
    def cosine(a: str, b: str) -> float:
        table = {line.split()[0]: np.array(line.split()[1:], dtype=float) for line in lines}
        va, vb = table[a], table[b]
        return float(va @ vb / (np.linalg.norm(va) * np.linalg.norm(vb)))

    assert cosine("bacon", "food") > 0.5
    assert cosine("bacon", "food") > cosine("carburetor", "food")
    assert cosine("brewery", "food") > 0.5


def _decorate(rng: np.random.Generator, text: str) -> str:
    style = rng.integers(0, 5)
    if style == 0:
        return text.capitalize() + "!!"
    if style == 1:
        return text + " #foodpuns #funny"
    if style == 2:
        return "@moviebuff " + text
    if style == 3:
        words = [w.upper() if rng.random() < 0.3 else w for w in text.split()]
        return " ".join(words) + "..."
    return text


def write_comments(food: list[str]) -> None:
    rng = np.random.default_rng(SEED_COMMENTS)
    comments: list[str] = []
    for index, title in enumerate(KEPT_TITLES):
        if index % 10 == 9:
            continue  # leave some titles without peer data
        words = title.split()
        content = [
            i for i, w in enumerate(words)
            if POS_OVERRIDES.get(w, "noun") in ("noun", "adj", "verb")
        ]
        if not content:
            continue
        n_comments = 1 + int(rng.integers(0, 3))
        for _ in range(n_comments):
            n_subs = 1 + int(rng.integers(0, 3))
            slots = list(rng.choice(content, size=min(n_subs, len(content)), replace=False))
            punned = list(words)
            for slot in slots:
                replacement = food[int(rng.integers(0, len(food)))]
                punned[slot] = inflect(replacement, words[slot], "noun")
            if punned == words:
                continue
            comments.append(_decorate(rng, " ".join(punned)))
    comments.extend(NOISE_COMMENTS)
    order = rng.permutation(len(comments))
    shuffled = [comments[i] for i in order]
    (DATA_DIR / "comments.txt").write_text("\n".join(shuffled) + "\n", encoding="utf-8")


def main() -> None:
    DATA_DIR.mkdir(parents=True, exist_ok=True)
    food, titles, cluster = build_vocab()
    write_food(food)
    write_pos(food, titles)
    write_titles()
    write_pronunciations(food, titles)
    write_inventory()
    write_embeddings(food, titles, cluster)
    write_comments(food)
    for name in sorted(p.name for p in DATA_DIR.iterdir()):
        print(f"wrote {name}")


if __name__ == "__main__":
    main()
