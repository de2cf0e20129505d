"""
The acceptance criteria and the per-module invariants, as plain check functions.

Every check takes a Config and returns a Result; ``run`` drives them and is
what both ``parityperm verify`` and tests/test_acceptance.py use. Golden
values live in module-level constants so a test can corrupt one and watch
the suite fail.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator

from . import arrangement as A
from . import bijections as B
from . import sequences as N
from . import perm as P
from .errors import BruteForceBoundExceeded, Overflow
from .families import (
    DUMONT_FAMILIES,
    LABELING_FAMILIES,
    MEDIAN_FAMILIES,
    FamilyId,
    count,
    enumerate_family,
    is_member,
    leftmost_even,
    naive_members,
    refined_count_first_letter,
)
from .labelings import LABELINGS, oracle_label, stages

# -- golden values ------------------------------------------------------------------

H = (1, 2, 8, 56, 608, 9440)          # h_0 .. h_5
G = (None, 1, 1, 3, 17, 155, 2073)    # g_1 .. g_6

SEIDEL_ROWS = (
    (1,),
    (1,),
    (1, 1),
    (2, 1),
    (2, 3, 3),
    (8, 6, 3),
    (8, 14, 17, 17),
    (56, 48, 34, 17),
    (56, 104, 138, 155, 155),
    (608, 552, 448, 310, 155),
)

FIRST_LETTER_ROWS = {
    1: (1, 1),
    2: (1, 1, 4, 2),
    3: (3, 3, 8, 6, 28, 8),
    4: (17, 17, 40, 34, 92, 48, 304, 56),
    5: (155, 155, 344, 310, 676, 448, 1472, 552, 4720, 608),
    6: (2073, 2073, 4456, 4146, 8060, 6064, 14848, 7672, 31472, 8832, 99136, 9440),
}

# varphi on GI(6,6) and GI(6,4)
VARPHI_3_2 = {
    "651432": "416532", "652143": "421653", "653142": "431652", "653214": "432165",
    "653412": "436512", "653421": "436521", "654312": "4312", "654321": "4321",
}
VARPHI_3_1 = {
    "431652": "2143", "432165": "214365", "436512": "4312",
    "436521": "216534", "421653": "216543", "416532": "4321",
}
# Phi on GI(6,6) and GI(6,4)
CAPITAL_PHI_3_3 = {
    "651432": "136425", "652143": "164235", "653142": "135624", "653214": "156234",
    "653412": "136245", "653421": "162345", "654312": "135642", "654321": "156423",
}
CAPITAL_PHI_3_2 = {
    "431652": "134256", "432165": "142356", "436512": "134562",
    "436521": "145623", "421653": "146235", "416532": "134625",
}

K18_IMAGES = {
    FamilyId.GI: "6 5 10 1 18 17 15 7 8 3 14 11 12 9 16 13 4 2",
    FamilyId.GII: "6 5 10 1 2 18 17 15 7 8 3 4 14 11 12 9 16 13",
    FamilyId.GIII: "6 5 10 1 18 7 15 17 8 3 14 11 12 9 16 13 4 2",
    FamilyId.GIV: "6 5 10 1 2 18 7 8 3 4 14 11 12 9 15 16 13 17",
}
# known stages 1..8; labeling IV stage 8 is given with letters shifted by 2
K18_STAGES = {
    FamilyId.GI: (
        "1 2", "3 1 4 2", "6 5 3 1 4 2", "7 6 5 1 8 3 4 2",
        "6 5 10 9 7 1 8 3 4 2", "11 6 5 10 7 1 8 3 12 9 4 2",
        "6 5 10 7 1 8 3 14 13 11 12 9 4 2",
        "15 6 5 10 7 1 8 3 14 11 12 9 16 13 4 2",
    ),
    FamilyId.GII: (
        "1 2", "3 1 2 4", "6 5 3 1 2 4", "7 6 5 1 2 8 3 4",
        "6 5 10 9 7 1 2 8 3 4", "11 6 5 10 7 1 2 8 3 4 12 9",
        "6 5 10 7 1 2 8 3 4 14 13 11 12 9",
        "15 6 5 10 7 1 2 8 3 4 14 11 12 9 16 13",
    ),
    FamilyId.GIII: {8: "15 6 5 10 1 7 8 3 14 11 12 9 16 13 4 2"},
    FamilyId.GIV: {8: "6 5 10 18 7 8 3 4 14 11 12 9 15 16 13 17"},
}
K18_GIII_BAD_PAIRS = {(15, 5), (15, 1)}

PSI_EXAMPLE = ("324165", "562143")
VARTHETA_EXAMPLE = ("5 10 7 12 11 9 8 4 3 1 6 2", "(5 9 11 12 8 7 10)(4)(3)(1 6 2)")
DC6 = {(1, 3, 5, 6, 4, 2), (1, 4, 3, 5, 6, 2), (1, 5, 6, 3, 4, 2)}
EC6 = {(1, 2, 3, 4, 5, 6), (1, 2, 4, 3, 5, 6), (1, 2, 5, 6, 3, 4)}
NORMALIZED_MEDIAN = (1, 1, 2, 7, 38, 295)


# -- plumbing ------------------------------------------------------------------------

@dataclass
class Config:
    max_n: int = 5
    jobs: int = 1
    slow: bool = False


@dataclass(frozen=True)
class Result:
    name: str
    ok: bool
    detail: str = ""
    seconds: float = 0.0

    def line(self) -> str:
        tag = "PASS" if self.ok else "FAIL"
        tail = f": {self.detail}" if self.detail else ""
        return f"{tag} {self.name}{tail}"


class _Failures:
    """Collects failure messages; keeps the first few."""

    def __init__(self, keep: int = 5):
        self.msgs: list[str] = []
        self.total = 0
        self.keep = keep

    def expect(self, cond, msg: str | Callable[[], str]) -> bool:
        if not cond:
            self.total += 1
            if len(self.msgs) < self.keep:
                self.msgs.append(msg() if callable(msg) else msg)
        return bool(cond)

    def detail(self) -> str:
        if not self.total:
            return ""
        more = f" (+{self.total - len(self.msgs)} more)" if self.total > len(self.msgs) else ""
        return "; ".join(self.msgs) + more


@dataclass(frozen=True)
class Check:
    name: str
    fn: Callable[[Config, _Failures], None]
    criterion: int | None = None


def _w(s: str) -> P.Word:
    return tuple(int(c) for c in s) if " " not in s else P.parse_word(s)


def _s(p) -> str:
    return "".join(map(str, p))


def _upto(cfg: Config, cap: int) -> range:
    return range(1, min(cap, cfg.max_n) + 1)


# -- criteria ---------------------------------------------------------------------------

def crit_family_counts(cfg: Config, f: _Failures) -> None:
    for n in _upto(cfg, 5):
        for fam in MEDIAN_FAMILIES:
            c = count(fam, 2 * n, cfg.jobs)
            f.expect(c == H[n], f"|{fam.value}_{2 * n}| = {c}, want {H[n]}")
    for n in _upto(cfg, 4):
        for fam in DUMONT_FAMILIES:
            c = count(fam, 2 * n, cfg.jobs)
            f.expect(c == G[n + 1], f"|{fam.value}_{2 * n}| = {c}, want {G[n + 1]}")
        c = count(FamilyId.COLLAPSED, 2 * n + 2, cfg.jobs)
        f.expect(c == H[n], f"|co_{2 * n + 2}| = {c}, want {H[n]}")


def crit_first_letter(cfg: Config, f: _Failures) -> None:
    rows = list(_upto(cfg, 5)) + ([6] if cfg.slow else [])
    for n in rows:
        got = refined_count_first_letter(2 * n, jobs=cfg.jobs).row()
        f.expect(got == FIRST_LETTER_ROWS[n], f"row {n}: {got} != {FIRST_LETTER_ROWS[n]}")


def crit_seidel(cfg: Config, f: _Failures) -> None:
    got = N.seidel(10)
    for m, (row, want) in enumerate(zip(got, SEIDEL_ROWS), start=1):
        f.expect(row == want, f"Seidel row {m}: {row} != {want}")
    f.expect(N.seidel_entry(7, 3) == 17 == N.seidel_entry(7, 2) + N.seidel_entry(6, 3), "S[7,3] != 17 = 14 + 3")


def gi_identities(rows: dict[int, tuple[int, ...]], f: _Failures) -> None:
    """The refined-count identities on a table {n: (G_{2n,1}, ..., G_{2n,2n})}."""

    def G2(n, k):
        if n == 0:
            return 1 if k == 1 else 0  # the empty word, by convention
        return rows[n][k - 1] if 1 <= k <= 2 * n else 0

    def total(n):
        return 1 if n == 0 else sum(rows[n])

    for n in sorted(rows):
        f.expect(G2(n, 1) == G2(n, 2), f"n={n}: G(2n,1) != G(2n,2)")
        if n >= 2:
            f.expect(G2(n, 3) == 2 * (G2(n, 1) + G2(n - 1, 1)), f"n={n}: G(2n,3) != 2(G(2n,1)+G(2n-2,1))")
        if n - 1 in rows or n == 1:
            f.expect(G2(n, 2 * n) == total(n - 1), f"n={n}: G(2n,2n) != G(2n-2)")
        f.expect(2 * G2(n, 2 * n - 1) == total(n), f"n={n}: 2G(2n,2n-1) != G(2n)")
        for k in range(1, n + 1):
            f.expect(G2(n, 2 * k) == N.seidel_entry(2 * n, n + 1 - k), f"n={n}, k={k}: G(2n,2k) != S(2n,n+1-k)")
        if n >= 2 and n - 1 in rows:
            for k in range(0, n):
                rhs = G2(n, 2 * k) + sum(G2(n - 1, 2 * i) for i in range(k, n))
                f.expect(G2(n, 2 * k + 2) == rhs, f"n={n}, k={k}: even-column recursion")


def crit_identities(cfg: Config, f: _Failures) -> None:
    rows = {n: refined_count_first_letter(2 * n, jobs=cfg.jobs).row() for n in _upto(cfg, 5)}
    gi_identities(rows, f)
    for n in range(2, 11):
        for k in range(n):
            f.expect(N.seidel_reflection_recursion_check(n, k), f"Seidel reflection recursion at ({n},{k})")


def crit_regions(cfg: Config, f: _Failures) -> None:
    for n in _upto(cfg, 4):
        c = len(A.enumerate_regions(n))
        f.expect(c == H[n], f"|R(K_{2 * n})| = {c}, want {H[n]}")


def check_labelings_at(n: int, f: _Failures, oracle: bool) -> None:
    regions = A.sorted_regions(n)
    for fam, lam in LABELINGS.items():
        images = {}
        for r in regions:
            p = lam(r)
            f.expect(is_member(fam, p), lambda: f"{fam.value}: {p} not a member for {r}")
            f.expect(A.compatible(p, r), lambda: f"{fam.value}: {p} not compatible with {r}")
            if oracle:
                f.expect(p == oracle_label(fam, r), lambda: f"{fam.value}: {p} differs from oracle on {r}")
            images[p] = r
        f.expect(len(images) == len(regions), f"{fam.value} not injective at n={n}")
        members = set(enumerate_family(fam, 2 * n))
        f.expect(set(images) == members, f"{fam.value} not onto the family at n={n}")


def check_k18(f: _Failures) -> None:
    r = A.example_k18()
    for fam, want in K18_IMAGES.items():
        got = P.format_word(LABELINGS[fam](r))
        f.expect(got == want, f"K18 {fam.value}: {got} != {want}")
    for fam, want in K18_STAGES.items():
        got = stages(fam, r)
        pairs = enumerate(want, start=1) if isinstance(want, tuple) else want.items()
        for m, text in pairs:
            w = got[m - 1]
            if fam is FamilyId.GIV:
                w = P.shift(w, 2 * (r.n - m))
            f.expect(P.format_word(w) == text, f"K18 {fam.value} stage {m}: {P.format_word(w)} != {text}")
    from .labelings import bad_pairs

    pen = stages(FamilyId.GIII, r)[-2]
    got = {(b.i, b.j) for b in bad_pairs(pen, r)}
    f.expect(got == K18_GIII_BAD_PAIRS, f"K18 giii bad pairs {got}")


def crit_labelings(cfg: Config, f: _Failures) -> None:
    for n in _upto(cfg, 4):
        check_labelings_at(n, f, oracle=n <= 3)
    check_k18(f)


def _bijection(f: _Failures, name: str, fwd, inv, domain: Iterable, codomain: Iterable) -> None:
    """fwd maps domain onto codomain, inv undoes it both ways."""
    domain = list(domain)
    codomain = set(codomain)
    images = []
    for p in domain:
        q = fwd(p)
        images.append(q)
        f.expect(q in codomain, lambda: f"{name}({_s(p)}) = {_s(q)} outside codomain")
        f.expect(inv(q) == p, lambda: f"{name}^-1({name}({_s(p)})) != {_s(p)}")
    f.expect(len(set(images)) == len(domain), f"{name} not injective")
    f.expect(set(images) == codomain, f"{name} not onto ({len(set(images))} of {len(codomain)})")
    for q in codomain:
        f.expect(fwd(inv(q)) == q, lambda: f"{name}({name}^-1({_s(q)})) != {_s(q)}")


def check_bijections_at(two_n: int, f: _Failures, with_capital_phi: bool) -> None:
    n = two_n // 2
    gi = list(enumerate_family(FamilyId.GI, two_n))
    gi_prev = list(enumerate_family(FamilyId.GI, two_n - 2)) if n > 1 else []
    ends2 = [p for p in gi if p[-1] == 2]
    _bijection(f, "eta", B.eta, B.eta_inv, [p for p in gi if p[-1] != 2], ends2)
    if n >= 2:
        _bijection(
            f, "f", B.f_map, lambda q: B.f_inv(q, two_n),
            [p for p in gi if p[0] == 3 and p[-1] != 2],
            [p for p in gi if p[0] == 1] + [p for p in gi_prev if p[0] == 1],
        )
    _bijection(f, "g", B.g_adv, B.g_inv, [p for p in gi if p[0] != two_n - 1], [p for p in gi if p[0] == two_n - 1])
    d3 = list(enumerate_family(FamilyId.DUMONT_III, two_n))
    d3_prev = list(enumerate_family(FamilyId.DUMONT_III, two_n - 2)) if n > 1 else []
    if n >= 2:
        for k in range(n):
            _bijection(
                f, f"varphi[{n},{k}]",
                lambda p, k=k: B.varphi(n, k, p), lambda q, k=k: B.varphi_inv(n, k, q),
                [p for p in gi if p[0] == 2 * k + 2],
                [p for p in gi if k > 0 and p[0] == 2 * k]
                + [p for p in gi_prev if p[0] % 2 == 0 and p[0] >= max(2 * k, 2)],
            )
            _bijection(
                f, f"phi3[{n},{k}]",
                lambda p, k=k: B.phi_diii(n, k, p), lambda q, k=k: B.phi_diii_inv(n, k, q),
                [p for p in d3 if leftmost_even(p) == 2 * k + 2],
                [p for p in d3 if k > 0 and leftmost_even(p) == 2 * k]
                + [p for p in d3_prev if leftmost_even(p) >= max(2 * k, 2)],
            )
        high = [p for p in d3 if leftmost_even(p) >= 4]
        _bijection(f, "tau", B.tau, B.tau_inv, [p for p in high if p[1] == 3], [p for p in high if p[1] != 3])
    if with_capital_phi:
        for k in range(1, n + 1):
            _bijection(
                f, f"Phi[{n},{k}]",
                lambda p, k=k: B.capital_phi(n, k, p), lambda q, k=k: B.capital_phi_inv(n, k, q),
                [p for p in gi if p[0] == 2 * k],
                [p for p in d3 if leftmost_even(p) == 2 * k],
            )
    co = list(enumerate_family(FamilyId.COLLAPSED, two_n + 2))
    dperm = list(enumerate_family(FamilyId.DPERM, two_n))
    eperm = list(enumerate_family(FamilyId.EPERM, two_n))
    _bijection(f, "theta", B.theta, B.theta_inv, co, dperm)
    _bijection(f, "psi", B.psi, B.psi_inv, eperm, gi)
    _bijection(f, "vartheta", B.vartheta, B.vartheta_inv, gi, dperm)
    _bijection(f, "Theta", B.capital_theta, B.capital_theta_inv, co, gi)


def check_bijection_examples(f: _Failures) -> None:
    for table, k in ((VARPHI_3_2, 2), (VARPHI_3_1, 1)):
        for a, b in table.items():
            got = _s(B.varphi(3, k, _w(a)))
            f.expect(got == b, f"varphi({a}) = {got}, table says {b}")
    for table, k in ((CAPITAL_PHI_3_3, 3), (CAPITAL_PHI_3_2, 2)):
        for a, b in table.items():
            got = _s(B.capital_phi(3, k, _w(a)))
            f.expect(got == b, f"Phi({a}) = {got}, table says {b}")
    a, b = PSI_EXAMPLE
    got = _s(B.psi(_w(a)))
    f.expect(got == b, f"psi({a}) = {got}")
    a, b = VARTHETA_EXAMPLE
    got = P.format_cycles(P.to_cycles(B.vartheta(_w(a)), P.MinimaOrder.DECREASING))
    f.expect(got == b, f"vartheta({a}) = {got}")


def crit_bijections(cfg: Config, f: _Failures) -> None:
    top = min(8, 2 * cfg.max_n)
    for two_n in range(2, top + 1, 2):
        check_bijections_at(two_n, f, with_capital_phi=two_n <= 6)
    check_bijection_examples(f)
    if top >= 8:
        for p in enumerate_family(FamilyId.GI, 8):
            q = B.vartheta(p)
            f.expect(set(P.left_to_right_minima(p)) == P.cycle_minima(q), f"Lrmin != Cmin for {_s(p)}")


def crit_number_theory(cfg: Config, f: _Failures) -> None:
    for n in range(1, 11):
        f.expect(N.genocchi(n) % 2 == 1, f"g_{n} even")
    for n in range(0, 10):
        f.expect(N.genocchi_from_tangent(n) == N.genocchi(n + 1), f"tangent formula fails at n={n}")
    for n in range(0, 9):
        f.expect(N.check_two_genocchi_identity(n), f"two-Genocchi identity fails at n={n}")
    for n, want in enumerate(NORMALIZED_MEDIAN):
        f.expect(N.normalized_median(n) == want, f"h_{n}/2^{n} = {N.normalized_median(n)}, want {want}")
    for n in range(0, 11):
        f.expect(N.median_genocchi(n) % 2**n == 0, f"2^{n} does not divide h_{n}")


def crit_cycles(cfg: Config, f: _Failures) -> None:
    for n in range(2, min(5, max(cfg.max_n, 2)) + 1):
        for fam in (FamilyId.ECYCLE, FamilyId.DCYCLE):
            c = count(fam, 2 * n, cfg.jobs)
            f.expect(c == G[n], f"|{fam.value}_{2 * n}| = {c}, want {G[n]}")
    for fam, want in ((FamilyId.DCYCLE, DC6), (FamilyId.ECYCLE, EC6)):
        got = {P.to_cycles(p).cycles[0] for p in enumerate_family(fam, 6)}
        f.expect(got == want, f"{fam.value}_6 = {sorted(got)}")


CRITERIA = (
    Check("family counts", crit_family_counts, 1),
    Check("refined first-letter table", crit_first_letter, 2),
    Check("Seidel triangle", crit_seidel, 3),
    Check("refined-count identities and Seidel recursion", crit_identities, 4),
    Check("region counts", crit_regions, 5),
    Check("labelings", crit_labelings, 6),
    Check("bijections", crit_bijections, 7),
    Check("number theory", crit_number_theory, 8),
    Check("cycle counts", crit_cycles, 9),
)


# -- module invariants ------------------------------------------------------------------

def inv_perm_core(cfg: Config, f: _Failures) -> None:
    for m in range(0, min(7, cfg.max_n + 2) + 1):
        for p in itertools.permutations(range(1, m + 1)):
            f.expect(P.inverse(P.inverse(p)) == p, f"inverse twice on {p}")
            for order in P.MinimaOrder:
                f.expect(P.from_cycles(P.to_cycles(p, order)) == p, f"cycle round trip on {p}")
            f.expect(P.even_odd_drops(p) <= P.drops(p), f"even-odd drops on {p}")
            if m <= 6:
                for kind in P.GENERALIZED_PATTERNS:
                    f.expect(
                        P.contains_generalized(p, kind, 0) == P.contains_parity_pattern(p, kind),
                        f"d=0 {kind} on {p}",
                    )
    for w in ((5, 9, 2, 7), (10, 3, 30, 4), (1,)):
        r = P.reduced_form(w)
        f.expect(P.reduced_form(r) == r, f"reduce not idempotent on {w}")
        f.expect(all((w[i] < w[j]) == (r[i] < r[j]) for i in range(len(w)) for j in range(len(w))), f"reduce order {w}")
    for n in _upto(cfg, 4):
        gi = set(enumerate_family(FamilyId.GI, 2 * n))
        x = set(enumerate_family(FamilyId.X, 2 * n))
        f.expect({P.reverse(p) for p in gi} == x, f"reverse(GI) != X at n={n}")


def inv_families(cfg: Config, f: _Failures) -> None:
    for n in _upto(cfg, 4):
        for fam in FamilyId:
            if fam is FamilyId.COLLAPSED and n == 4:
                continue  # 10! naive filter; covered at the family-count criterion
            got = list(enumerate_family(fam, 2 * n))
            f.expect(got == list(naive_members(fam, 2 * n)), f"pruned != naive for {fam.value}_{2 * n}")
    for n in _upto(cfg, 5):
        row = refined_count_first_letter(2 * n).row()
        f.expect(all(c % 2 == 0 for c in row[2:]), f"odd G(2n,k), k>=3, at n={n}")


def inv_numbers(cfg: Config, f: _Failures) -> None:
    tri = N.seidel(20)
    for m in range(2, 21):
        row, prev = tri[m - 1], tri[m - 2]
        width = (m + 1) // 2
        at = lambda t, k: t[k - 1] if 1 <= k <= len(t) else 0
        for k in range(1, width + 1):
            if m % 2 == 0:
                ok = at(row, k) == at(prev, k) + at(row, k + 1)
            else:
                ok = at(row, k) == at(prev, k) + at(row, k - 1)
            f.expect(ok, f"Seidel rule at ({m},{k})")
    for n in range(1, 11):
        f.expect(N.genocchi_from_tangent(n - 1) == N.genocchi(n), f"tangent route at n={n}")


def inv_arrangement(cfg: Config, f: _Failures) -> None:
    for n in _upto(cfg, 4):
        regions = A.enumerate_regions(n)
        for r in regions:
            A.poset(r)  # raises on cycles
            if n > 1:
                f.expect(A.is_realizable(A.proj(r)) and A.is_realizable(A.proj_prime(r)), f"projection of {r}")
            if n <= 3:
                exts = list(A.linear_extensions(A.poset(r)))
                f.expect(all(A.region_of(p) == r for p in exts), f"extension not compatible with {r}")
                for fam in LABELING_FAMILIES:
                    hits = sum(1 for p in exts if is_member(fam, p))
                    f.expect(hits == 1, f"{hits} members of {fam.value} compatible with {r}")


def inv_labelings(cfg: Config, f: _Failures) -> None:
    for n in _upto(cfg, 4):
        for r in A.enumerate_regions(n):
            for fam, lam in LABELINGS.items():
                f.expect(A.region_of(lam(r)) == r, f"region_of({fam.value}({r})) != region")


def inv_bijections(cfg: Config, f: _Failures) -> None:
    # the hat/check split by last letter 2 is kept by varphi for k >= 2
    for two_n in (6, 8)[: 1 if cfg.max_n < 4 else 2]:
        n = two_n // 2
        for k in range(2, n):
            for p in enumerate_family(FamilyId.GI, two_n, first=2 * k + 2):
                q = B.varphi(n, k, p)
                f.expect((p[-1] == 2) == (q[-1] == 2), f"varphi moves {_s(p)} across the bisection")
    for n in _upto(cfg, 5):
        single = sum(1 for p in enumerate_family(FamilyId.EPERM, 2 * n) if P.cycle_count(p) == 1)
        starts1 = sum(1 for p in enumerate_family(FamilyId.GI, 2 * n, first=1))
        f.expect(single == starts1 == G[n], f"single-cycle E-perms at n={n}: {single}, {starts1}")
        for p in enumerate_family(FamilyId.EPERM, 2 * n):
            f.expect((P.cycle_count(p) == 1) == (B.psi(p)[0] == 1), f"psi first letter on {_s(p)}")
    # theta: odd positions are the window constraint, even positions the drop bound
    for n in _upto(cfg, 4):
        for p in enumerate_family(FamilyId.COLLAPSED, 2 * n + 2):
            s = B.theta(p)
            f.expect(all(s[2 * i - 2] >= 2 * i - 1 and s[2 * i - 1] <= 2 * i for i in range(1, n + 1)), f"theta({_s(p)})")
    # vartheta images have fixed points of both parities
    fixed = set()
    for p in enumerate_family(FamilyId.GI, 2 * min(4, cfg.max_n)):
        s = B.vartheta(p)
        fixed |= {i % 2 for i in range(1, len(s) + 1) if s[i - 1] == i}
    if cfg.max_n >= 2:
        f.expect(fixed == {0, 1}, f"vartheta fixed-point parities {fixed}")


def inv_determinism(cfg: Config, f: _Failures) -> None:
    if cfg.jobs > 1:
        for fam in (FamilyId.GI, FamilyId.EPERM):
            two_n = 2 * min(4, cfg.max_n)
            f.expect(count(fam, two_n, 1) == count(fam, two_n, cfg.jobs), f"count({fam.value}) depends on jobs")


INVARIANTS = (
    Check("perm-core invariants", inv_perm_core),
    Check("family invariants", inv_families),
    Check("number invariants", inv_numbers),
    Check("arrangement invariants", inv_arrangement),
    Check("labeling invariants", inv_labelings),
    Check("bijection invariants", inv_bijections),
    Check("worker-count determinism", inv_determinism),
)


def run_check(check: Check, cfg: Config) -> Result:
    f = _Failures()
    t0 = time.perf_counter()
    try:
        check.fn(cfg, f)
    except (Overflow, BruteForceBoundExceeded):
        raise  # resource limits are reported by the caller, not as failures
    except Exception as exc:  # a crash is a failure, not a pass
        f.expect(False, f"{type(exc).__name__}: {exc}")
    name = f"criterion {check.criterion}: {check.name}" if check.criterion else check.name
    return Result(name, f.total == 0, f.detail(), time.perf_counter() - t0)


def run(cfg: Config | None = None, include_invariants: bool = True) -> Iterator[Result]:
    cfg = cfg or Config()
    checks = CRITERIA + (INVARIANTS if include_invariants else ())
    for check in checks:
        yield run_check(check, cfg)
