"""Admissible monomial orders: lex, graded reverse lex, and elimination blocks.

An order is materialized as a key function on exponent tuples; larger key
means larger monomial.  Keys are plain tuples so they can double as heap
priorities.
"""

from __future__ import annotations


def _lex_key(exps):
    return exps


def _grevlex_key(exps):
    return (sum(exps), tuple(-e for e in reversed(exps)))


_BASE_KEYS = {"lex": _lex_key, "grevlex": _grevlex_key}


class TermOrder:
    """One of lex, grevlex, or a two-block elimination order.

    In the elimination order the ``block_vars`` are greater than everything
    else; inside each block the ``inner`` order applies.  A polynomial whose
    leading monomial is free of block variables is then entirely free of
    them, which is what makes elimination work.
    """

    def __init__(self, kind="grevlex", block_vars=(), inner="grevlex"):
        if kind not in ("lex", "grevlex", "block"):
            raise ValueError(f"unknown term order kind {kind!r}")
        if inner not in _BASE_KEYS:
            raise ValueError(f"unknown inner order {inner!r}")
        self.kind = kind
        self.block_vars = tuple(block_vars)
        self.inner = inner

    @classmethod
    def lex(cls):
        return cls("lex")

    @classmethod
    def grevlex(cls):
        return cls("grevlex")

    @classmethod
    def elimination(cls, block_vars, inner="grevlex"):
        return cls("block", block_vars=block_vars, inner=inner)

    def key_function(self, names):
        """Return a key callable for exponent tuples over the variables ``names``."""
        names = tuple(names)
        if self.kind in _BASE_KEYS:
            return _BASE_KEYS[self.kind]
        missing = [v for v in self.block_vars if v not in names]
        if missing:
            raise ValueError(f"block variables {missing} not in ring {names}")
        in_block = [i for i, v in enumerate(names) if v in set(self.block_vars)]
        out_block = [i for i in range(len(names)) if i not in set(in_block)]
        base = _BASE_KEYS[self.inner]

        def key(exps, _in=tuple(in_block), _out=tuple(out_block), _base=base):
            return (_base(tuple(exps[i] for i in _in)),
                    _base(tuple(exps[i] for i in _out)))

        return key

    def __repr__(self):
        if self.kind == "block":
            return f"TermOrder.elimination({self.block_vars!r}, inner={self.inner!r})"
        return f"TermOrder.{self.kind}()"


GREVLEX = TermOrder.grevlex()
LEX = TermOrder.lex()
