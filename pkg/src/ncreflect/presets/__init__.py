"""Built-in worked examples (catalogue assembled in ``catalog``)."""
