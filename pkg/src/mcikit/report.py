"""Per-group analysis rows and theorem checks used by ``scan`` and ``verify``.

Claim ids:

* ``TA``    p-group order bound ``|G| <= p^(2k+2)`` (Q8 exempt)
* ``P1``    non-abelian Sylow subgroups have order at most ``8 m^4``
* ``T2``    nilpotent groups have order at most ``8 m^5``
* ``TB``    ``|G| <= prod(pi*) f0(m)``
* ``PS``    at most 5 bad primes, at most 2 for soluble groups
* ``L21``   ``mci = 1`` exactly for Q8 and non-abelian groups of order pq
* ``L36``   in a centerless group, bad primes are the isolated primes dividing |G| once
* ``OMEGA`` Omega-index monotonicity and companions for p-central p-groups
"""
from __future__ import annotations

import json
from dataclasses import asdict, dataclass

from .group import Group, center, is_abelian
from .mci import (
    bad_primes,
    build_ledger,
    is_q8_like,
    isolated_primes_of_first_power,
    mci,
    prime_graph,
    reduction_check,
)
from .pgroup import agemo, exponent_of, omega, profile
from .primality import factorize
from .structure import is_nilpotent, is_p_group, is_soluble

CLAIMS = ("TA", "P1", "T2", "TB", "PS", "L21", "L36", "OMEGA")
LEDGER_CLAIMS = ("TA", "P1", "T2", "TB", "PS")

HOLDS, FAILS, NA = "ok", "FAIL", "n/a"

TSV_COLUMNS = ("label", "order", "abelian", "m", "kExp", "witness", "piStar",
               "components", "flags") + CLAIMS


@dataclass(frozen=True)
class ClaimResult:
    claim: str
    status: str
    detail: str = ""


def expected_mci_one(G: Group) -> bool:
    """Q8, or non-abelian of order pq with q = 1 mod p (G assumed non-abelian)."""
    if is_q8_like(G):
        return True
    f = factorize(G.order)
    if len(f) == 2 and all(e == 1 for e in f.values()):
        p, q = sorted(f)
        return (q - 1) % p == 0
    return False


def _check_ledger(G: Group, claim: str) -> ClaimResult:
    if is_abelian(G):
        return ClaimResult(claim, NA, "abelian")
    led = build_ledger(G)
    recs = led.claim(claim)
    if not recs:
        return ClaimResult(claim, NA)
    bad = [r for r in recs if not r.holds]
    if bad:
        r = bad[0]
        w = mci(G).witness.idx
        return ClaimResult(claim, FAILS,
                           f"lhs={r.lhs} rhs={r.rhs} m={led.m} witness={w} {r.detail}".strip())
    ex = [r.exemption for r in recs if r.exemption]
    return ClaimResult(claim, HOLDS, f"exempt={ex[0]}" if ex else "")


def _check_l21(G: Group) -> ClaimResult:
    if is_abelian(G):
        return ClaimResult("L21", NA, "abelian")
    rep = mci(G)
    expected = expected_mci_one(G)
    if (rep.m == 1) == expected:
        return ClaimResult("L21", HOLDS)
    return ClaimResult("L21", FAILS,
                       f"mci={rep.m} witness={rep.witness.idx} expected_mci_one={expected}")


def _check_l36(G: Group) -> ClaimResult:
    if G.order == 1 or center(G).order != 1:
        return ClaimResult("L36", NA)
    bad = bad_primes(G)
    iso = isolated_primes_of_first_power(G)
    if bad == iso:
        return ClaimResult("L36", HOLDS)
    return ClaimResult("L36", FAILS, f"bad={bad} isolated_once={iso}")


def omega_violations(G: Group) -> list[str]:
    """Failures of the Omega-index inequalities on a p-central p-group."""
    prof = profile(G)
    p = prof.p
    out = []
    idx = prof.omega_indices
    for i in range(len(idx) - 1):
        if idx[i + 1] > idx[i]:
            out.append(f"|O{i + 2}:O{i + 1}|={idx[i + 1]} > |O{i + 1}:O{i}|={idx[i]}")
    for i in range(1, prof.exponent_exp + 1):
        e = exponent_of(omega(G, i).as_group()[0])
        if e > p ** i:
            out.append(f"exp O{i}={e} > p^{i}")
    if G.order // agemo(G, 1).order > omega(G, 1).order:
        out.append(f"|G:G^p|={G.order // agemo(G, 1).order} > |O1|={omega(G, 1).order}")
    return out


def _check_omega(G: Group) -> ClaimResult:
    if G.order == 1 or not is_p_group(G) or not profile(G).flags["pCentral"]:
        return ClaimResult("OMEGA", NA)
    bad = omega_violations(G)
    if bad:
        return ClaimResult("OMEGA", FAILS, "; ".join(bad))
    return ClaimResult("OMEGA", HOLDS)


def check_claim(G: Group, claim: str) -> ClaimResult:
    if claim in LEDGER_CLAIMS:
        return _check_ledger(G, claim)
    if claim == "L21":
        return _check_l21(G)
    if claim == "L36":
        return _check_l36(G)
    if claim == "OMEGA":
        return _check_omega(G)
    raise ValueError(f"unknown claim {claim!r}")


def check_claims(G: Group, claims=CLAIMS) -> list[ClaimResult]:
    return [check_claim(G, c) for c in claims]


def group_flags(G: Group) -> list[str]:
    flags = []
    if is_abelian(G):
        flags.append("abelian")
    if is_nilpotent(G):
        flags.append("nilpotent")
    if is_soluble(G):
        flags.append("soluble")
    if G.order > 1 and is_p_group(G):
        prof = profile(G)
        flags.extend(k for k in ("pCentral", "powerful", "camina", "special") if prof.flags[k])
    return flags


def analyze(G: Group, claims=CLAIMS) -> dict:
    """Everything the reports show about one group, as plain data."""
    abelian = is_abelian(G)
    row: dict = {"label": G.label, "order": G.order, "abelian": abelian}
    if abelian:
        row.update(m=None, kExp=None, witness=None, piStar=None)
    else:
        rep = mci(G)
        row.update(m=rep.m, kExp=rep.k_exp, witness=rep.witness.idx, piStar=bad_primes(G))
    row["components"] = [list(c) for c in prime_graph(G).components] if G.order > 1 else []
    row["flags"] = group_flags(G)
    if G.order > 1 and is_p_group(G):
        prof = profile(G)
        row["pgroup"] = {"p": prof.p, "orderExp": prof.order_exp, "exponentExp": prof.exponent_exp,
                         "omegaOrders": list(prof.omega_orders),
                         "agemoOrders": list(prof.agemo_orders)}
    if not abelian:
        led = build_ledger(G)
        row["ledger"] = {
            "f0": led.f0, "f1": led.f1, "productPiStar": led.product_pi_star,
            "records": [asdict(r) for r in led.records],
        }
        if led.pi_star:
            row["reductionCheck"] = reduction_check(G)
    row["claims"] = {r.claim: asdict(r) for r in check_claims(G, claims)}
    return row


def _fmt(v) -> str:
    if v is None:
        return "-"
    if isinstance(v, bool):
        return "yes" if v else "no"
    if isinstance(v, list):
        return ",".join(_fmt(x) for x in v) if v else "-"
    return str(v)


def tsv_header(claims=CLAIMS) -> str:
    return "\t".join(TSV_COLUMNS[:9] + tuple(claims))


def tsv_row(row: dict, claims=CLAIMS) -> str:
    comps = "|".join(",".join(str(p) for p in c) for c in row["components"]) or "-"
    cells = [row["label"], str(row["order"]), _fmt(row["abelian"]), _fmt(row["m"]),
             _fmt(row["kExp"]), _fmt(row["witness"]), _fmt(row["piStar"]), comps,
             _fmt(row["flags"])]
    cells.extend(row["claims"][c]["status"] for c in claims)
    return "\t".join(cells)


def to_json(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True)
