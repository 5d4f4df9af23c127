"""Exact rowmotion, toggles and homomesy on finite posets.

Labeling values cross the boundary as exact ``p/q`` strings and surface
here as ``fractions.Fraction``.
"""

from fractions import Fraction

from . import _core
from ._core import (
    ParseError,
    Poset,
    RowmotionError,
    Subset,
    Word,
    antichain,
    as_subset,
    chain,
    chain_product,
    check_names,
    classify,
    filter_of,
    gyration,
    homomesy,
    ideal_of,
    indicator,
    max_elements,
    op_inverse,
    op_transfer,
    or_inverse,
    or_transfer,
    orbit,
    pl_t_star,
    pl_tau_star,
    pl_toggle,
    root_poset_A,
    row_A,
    row_C,
    row_F,
    row_J,
    row_OP,
    row_OR,
    rowmotion,
    states,
    t_star,
    tau_star,
    toggle,
    verify,
    word_orbit,
    zigzag,
)

__all__ = [
    "Fraction", "Labeling", "ParseError", "Poset", "RowmotionError", "Subset", "Word",
    "antichain", "as_subset", "cesaro_average", "chain", "chain_product", "chain_sums_through",
    "check_names", "classify", "filter_of", "gyration", "homomesy", "ideal_of", "indicator",
    "max_elements", "op_inverse", "op_transfer", "or_inverse", "or_transfer", "orbit",
    "orbit_averages", "pl_t_star", "pl_tau_star", "pl_toggle", "root_poset_A", "row_A", "row_C",
    "row_F", "row_J", "row_OP", "row_OR", "rowmotion", "states", "t_star", "tau_star", "toggle",
    "verify", "word_orbit", "zigzag",
]


def _text(x):
    if isinstance(x, float):
        raise TypeError("use Fraction or a decimal string, not float: values are exact")
    return str(Fraction(x)) if not isinstance(x, str) else x


def Labeling(poset, space, values):
    """Labeling from a mapping id -> value or a sequence in element order.

    Values may be Fraction, int, or strings such as "0.7" or "3/10".
    """
    if isinstance(values, str):
        return _core._Labeling.parse(poset, space, values)
    if hasattr(values, "items"):
        missing = set(poset.ids) - set(values)
        if missing:
            raise ValueError(f"no value for {sorted(missing)}")
        values = [values[i] for i in poset.ids]
    return _core._Labeling(poset, space, [_text(v) for v in values])


def _values(self):
    return dict(zip(self.poset.ids, (Fraction(v) for v in self.raw_values)))


def _getitem(self, element):
    return self.values[element]


_core._Labeling.values = property(_values)
_core._Labeling.__getitem__ = _getitem
_core._Labeling.__repr__ = lambda self: f"<{self.space} labeling {self.to_string()}>"
Labeling.load = lambda poset, space, path: _core._Labeling.load(poset, space, path)


def chain_sums_through(labeling, element):
    return [Fraction(s) for s in _core.chain_sums_through(labeling, element)]


def cesaro_average(word, start, statistic, n):
    return Fraction(_core.cesaro_average(word, start, statistic, n))


def orbit_averages(word, starts, stats, cap=1_000_000):
    return _core.orbit_averages(word, list(starts), stats, cap)
