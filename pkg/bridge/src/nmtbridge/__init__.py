"""Neural apprentice bridge: a torch seq2seq behind the JSON wire protocol."""

__version__ = "0.1.0"
