"""Word-level GRU encoder-decoder with attention and a copy gate.

The copy gate mixes the generation distribution with the attention
distribution over source positions, so the model can emit source words it
has never seen in training -- the behavior the substitution task rewards.
Architecture defaults (2 encoder layers, 2 decoder layers, copy attention on)
come from the bridge config and are not hard requirements.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

import torch
import torch.nn as nn

PAD, BOS, EOS, UNK = 0, 1, 2, 3
SPECIALS = ["<pad>", "<bos>", "<eos>", "<unk>"]


@dataclass
class ModelConfig:
    embedding_dim: int = 64
    hidden_dim: int = 128
    layers: int = 2
    dropout: float = 0.0
    learning_rate: float = 1e-3
    batch_size: int = 16
    copy_attention: bool = True
    max_decode_extra: int = 4
    extra: dict = field(default_factory=dict)  # pass-through, unused here

    @classmethod
    def from_dict(cls, raw: dict) -> "ModelConfig":
        known = {f for f in cls.__dataclass_fields__ if f != "extra"}
        kwargs = {k: v for k, v in raw.items() if k in known}
        extra = {k: v for k, v in raw.items() if k not in known}
        return cls(**kwargs, extra=extra)


class Vocab:
    def __init__(self):
        self.word_to_id: dict[str, int] = {w: i for i, w in enumerate(SPECIALS)}
        self.id_to_word: list[str] = list(SPECIALS)

    def add(self, word: str) -> int:
        idx = self.word_to_id.get(word)
        if idx is None:
            idx = len(self.id_to_word)
            self.word_to_id[word] = idx
            self.id_to_word.append(word)
        return idx

    def __len__(self) -> int:
        return len(self.id_to_word)

    def encode(self, words) -> list[int]:
        return [self.word_to_id.get(w, UNK) for w in words]


class Seq2Seq(nn.Module):
    def __init__(self, vocab_size: int, config: ModelConfig):
        super().__init__()
        self.config = config
        self.embedding = nn.Embedding(vocab_size, config.embedding_dim, padding_idx=PAD)
        self.encoder = nn.GRU(
            config.embedding_dim, config.hidden_dim, num_layers=config.layers,
            batch_first=True, dropout=config.dropout if config.layers > 1 else 0.0,
        )
        self.decoder = nn.GRU(
            config.embedding_dim, config.hidden_dim, num_layers=config.layers,
            batch_first=True, dropout=config.dropout if config.layers > 1 else 0.0,
        )
        self.attention = nn.Linear(config.hidden_dim, config.hidden_dim, bias=False)
        self.out = nn.Linear(2 * config.hidden_dim, vocab_size)
        self.copy_gate = nn.Linear(2 * config.hidden_dim + config.embedding_dim, 1)

    def grow_vocab(self, new_size: int) -> None:
        """Expand embedding and output layers, keeping learned rows."""
        old_size = self.embedding.num_embeddings
        if new_size <= old_size:
            return
        old_embedding, old_out = self.embedding, self.out
        self.embedding = nn.Embedding(new_size, self.config.embedding_dim, padding_idx=PAD)
        self.out = nn.Linear(2 * self.config.hidden_dim, new_size)
        with torch.no_grad():
            self.embedding.weight[:old_size] = old_embedding.weight
            self.out.weight[:old_size] = old_out.weight
            self.out.bias[:old_size] = old_out.bias

    def encode(self, src: torch.Tensor):
        mask = src.ne(PAD)
        states, hidden = self.encoder(self.embedding(src))
        return states, hidden, mask

    def decode_step(self, token, hidden, enc_states, enc_mask):
        """One decoder step; returns (log-ish probs pieces, new hidden)."""
        emb = self.embedding(token).unsqueeze(1)
        output, hidden = self.decoder(emb, hidden)
        query = output.squeeze(1)
        scores = torch.bmm(enc_states, self.attention(query).unsqueeze(2)).squeeze(2)
        scores = scores.masked_fill(~enc_mask, float("-inf"))
        attn = torch.softmax(scores, dim=1)
        context = torch.bmm(attn.unsqueeze(1), enc_states).squeeze(1)
        features = torch.cat([query, context], dim=1)
        gen_dist = torch.softmax(self.out(features), dim=1)
        if not self.config.copy_attention:
            return gen_dist, attn, torch.ones(token.shape[0], device=token.device), hidden
        p_gen = torch.sigmoid(
            self.copy_gate(torch.cat([features, emb.squeeze(1)], dim=1))
        ).squeeze(1)
        return gen_dist, attn, p_gen, hidden


class NeuralApprentice:
    """Trainable wrapper: cumulative sampled-batch training, greedy decoding."""

    def __init__(self, config: ModelConfig, seed: int = 0):
        self.config = config
        self.seed = seed
        self.vocab = Vocab()
        self.rng = random.Random(seed)
        torch.manual_seed(seed)
        self.model = Seq2Seq(len(SPECIALS), config)
        self.optimizer = torch.optim.Adam(self.model.parameters(), lr=config.learning_rate)
        self.steps_trained = 0
        self._corpus: list[tuple[list[str], list[str]]] = []

    def _refresh_vocab(self, pairs) -> None:
        for source, target in pairs:
            for word in list(source) + list(target):
                self.vocab.add(word)
        if len(self.vocab) > self.model.embedding.num_embeddings:
            self.model.grow_vocab(len(self.vocab))
            self.optimizer = torch.optim.Adam(
                self.model.parameters(), lr=self.config.learning_rate
            )

    def _batch_tensors(self, batch):
        max_src = max(len(s) for s, _ in batch)
        max_tgt = max(len(t) for _, t in batch) + 1  # plus EOS
        src = torch.full((len(batch), max_src), PAD, dtype=torch.long)
        tgt = torch.full((len(batch), max_tgt), PAD, dtype=torch.long)
        for row, (source, target) in enumerate(batch):
            ids = self.vocab.encode(source)
            src[row, : len(ids)] = torch.tensor(ids)
            tgt_ids = self.vocab.encode(target) + [EOS]
            tgt[row, : len(tgt_ids)] = torch.tensor(tgt_ids)
        return src, tgt

    def _final_dist(self, gen_dist, attn, p_gen, src):
        # Copy mass lands on the source token ids; decoding maps UNK hits
        # back to the most-attended source word.
        if not self.config.copy_attention:
            return gen_dist
        final = gen_dist * p_gen.unsqueeze(1)
        return final.scatter_add(1, src, attn * (1 - p_gen).unsqueeze(1))

    def train_steps(self, pairs, steps: int) -> int:
        """Run `steps` optimizer steps on uniformly sampled batches."""
        if steps < 0:
            raise ValueError("steps must be nonnegative")
        if steps > 0 and not pairs:
            raise ValueError("cannot train on an empty corpus")
        self._corpus = [(list(s), list(t)) for s, t in pairs]
        self._refresh_vocab(self._corpus)
        self.model.train()
        for _ in range(steps):
            batch = [
                self._corpus[self.rng.randrange(len(self._corpus))]
                for _ in range(min(self.config.batch_size, len(self._corpus)))
            ]
            src, tgt = self._batch_tensors(batch)
            enc_states, hidden, mask = self.model.encode(src)
            token = torch.full((len(batch),), BOS, dtype=torch.long)
            loss = torch.zeros(())
            token_count = 0
            for position in range(tgt.shape[1]):
                gen_dist, attn, p_gen, hidden = self.model.decode_step(
                    token, hidden, enc_states, mask
                )
                final = self._final_dist(gen_dist, attn, p_gen, src)
                gold = tgt[:, position]
                live = gold.ne(PAD)
                if live.any():
                    probs = final.gather(1, gold.unsqueeze(1)).squeeze(1).clamp_min(1e-9)
                    loss = loss - (torch.log(probs) * live.float()).sum()
                    token_count += int(live.sum())
                token = gold  # teacher forcing
            if token_count:
                self.optimizer.zero_grad()
                (loss / token_count).backward()
                self.optimizer.step()
            self.steps_trained += 1
        return self.steps_trained

    @torch.no_grad()
    def generate(self, titles) -> list[list[str]]:
        if self.steps_trained == 0:
            raise ValueError("untrained model")
        self.model.eval()
        outputs = []
        for title in titles:
            words = list(title)
            src = torch.tensor([self.vocab.encode(words)], dtype=torch.long)
            enc_states, hidden, mask = self.model.encode(src)
            token = torch.tensor([BOS], dtype=torch.long)
            decoded: list[str] = []
            for _ in range(len(words) + self.config.max_decode_extra):
                gen_dist, attn, p_gen, hidden = self.model.decode_step(
                    token, hidden, enc_states, mask
                )
                final = self._final_dist(gen_dist, attn, p_gen, src)
                best = int(final.argmax(dim=1))
                if best == EOS:
                    break
                if best == UNK or best == PAD:
                    # fall back to the most-attended source word
                    best_pos = int(attn.argmax(dim=1))
                    decoded.append(words[best_pos])
                    token = src[0, best_pos].unsqueeze(0)
                    continue
                decoded.append(self.vocab.id_to_word[best])
                token = torch.tensor([best], dtype=torch.long)
            outputs.append(decoded or list(words))
        return outputs

    def state_dict(self) -> dict:
        return {
            "model": self.model.state_dict(),
            "optimizer": self.optimizer.state_dict(),
            "vocab": self.vocab.id_to_word,
            "steps_trained": self.steps_trained,
            "rng": self.rng.getstate(),
            "seed": self.seed,
        }

    def load_state_dict(self, state: dict) -> None:
        self.vocab = Vocab()
        for word in state["vocab"][len(SPECIALS):]:
            self.vocab.add(word)
        self.model.grow_vocab(len(self.vocab))
        self.model.load_state_dict(state["model"])
        self.optimizer = torch.optim.Adam(
            self.model.parameters(), lr=self.config.learning_rate
        )
        self.optimizer.load_state_dict(state["optimizer"])
        self.steps_trained = state["steps_trained"]
        self.rng.setstate(state["rng"])
        self.seed = state["seed"]
