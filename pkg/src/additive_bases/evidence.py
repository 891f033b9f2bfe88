"""Data report on the equality and negative-element questions.

Nothing here is a theorem. For each ``(h, k)`` the report computes the exact
``n_h(k)`` and bounded searches for ``m_h(k)``, ``n#_h(k)``, ``m#_h(k)``. It
records which equalities hold on the explored spaces and whether any set
with a negative element beats ``n_h(k)``. Bounded values carry
``LowerBound``.
"""

from __future__ import annotations

from itertools import combinations

from .config import as_budget
from .extremal import Certificate, m_basis, m_sharp, n_basis, n_sharp
from .intset import Interval
from .sumset import ell_from_mask, sumset_mask


def default_window(h: int, k: int, n_value: int, negative_reach: int = 6) -> Interval:
    """``[-negative_reach, n_h(k) + 1]``: contains every N0 optimizer."""
    return Interval(-negative_reach, n_value + 1)


def negative_max(h: int, k: int, window: Interval, budget=None) -> tuple[int, tuple]:
    """Largest ``ell_h`` over ``k``-subsets of ``window`` with a negative minimum."""
    budget = as_budget(budget)
    best, best_set = -1, ()
    for lo in range(window.lo, 0):
        for rest in combinations(range(lo + 1, window.hi + 1), k - 1):
            budget.charge()
            v = ell_from_mask(*sumset_mask((lo,) + rest, h))
            if v is not None and v > best:
                best, best_set = v, (lo,) + rest
    return best, best_set


def open_problem_report(hs=range(2, 5), ks=range(2, 5), negative_reach: int = 6, budget=None) -> dict:
    budget = as_budget(budget)
    rows = []
    for h in hs:
        for k in ks:
            n = n_basis(h, k, budget)
            window = default_window(h, k, n.value, negative_reach)
            m = m_basis(h, k, window, budget)
            # diameter bound matched to the window so that m <= m# is covered
            span = window.length
            ns = n_sharp(h, k, span, budget)
            ms = m_sharp(h, k, span, budget)
            neg, neg_set = negative_max(h, k, window, budget)
            chain = {
                "n<=m": n.value <= m.value,
                "m<=m_sharp": m.value <= ms.value,
                "n<=n_sharp": n.value <= ns.value,
                "n_sharp==m_sharp": ns.value == ms.value,
            }
            rows.append(
                {
                    "h": h,
                    "k": k,
                    "window": window.to_list(),
                    "diameter_bound": span,
                    "n": {"value": n.value, "witness": list(n.witness), "certificate": n.certificate.value},
                    "m": {"value": m.value, "witness": list(m.witness), "certificate": m.certificate.value},
                    "n_sharp": {"value": ns.value, "witness": list(ns.witness), "certificate": ns.certificate.value},
                    "m_sharp": {"value": ms.value, "witness": list(ms.witness), "certificate": ms.certificate.value},
                    "equalities": {
                        "n==m": n.value == m.value,
                        "n==n_sharp": n.value == ns.value,
                        "m==m_sharp": m.value == ms.value,
                    },
                    "negatives": {
                        "max_ell_negative_min": neg,
                        "witness": list(neg_set),
                        "le_n": neg <= n.value,
                        "lt_n": neg < n.value,
                    },
                    "inequality_chain": chain,
                    "consistent": all(chain.values()),
                    "lower_bound_fields": sorted(
                        name
                        for name, r in (("m", m), ("n_sharp", ns), ("m_sharp", ms))
                        if r.certificate is Certificate.LOWER_BOUND
                    ),
                }
            )
    return {"rows": rows, "consistent": all(r["consistent"] for r in rows)}
