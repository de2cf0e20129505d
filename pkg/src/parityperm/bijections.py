"""
Constructive bijections between the families, each paired with its inverse.

Slices used throughout:
    GI(2n, k)   members of GI of length 2n with first letter k
    D3(2n, 2k)  Dumont permutations of the third kind whose leftmost even is 2k
Every map checks that its input lies in the declared domain and raises
NotInDomain otherwise.
"""

from __future__ import annotations

from typing import Sequence

from . import perm as P
from .errors import NotInDomain
from .families import FamilyId, is_member, leftmost_even

Word = P.Word


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise NotInDomain(msg)


def _perm(p: Sequence[int]) -> Word:
    try:
        return P.as_permutation(p)
    except ValueError as exc:
        raise NotInDomain(str(exc)) from exc


def _in_gi(p: Sequence[int]) -> Word:
    p = _perm(p)
    _require(len(p) >= 2 and len(p) % 2 == 0 and is_member(FamilyId.GI, p), f"{p} is not in GI")
    return p


def _in_d3(p: Sequence[int]) -> Word:
    p = _perm(p)
    _require(len(p) >= 2 and len(p) % 2 == 0 and is_member(FamilyId.DUMONT_III, p), f"{p} is not in D3")
    return p


def lift(word: Sequence[int], threshold: int, by: int = 2) -> Word:
    """Add ``by`` to every letter >= threshold."""
    return tuple(x + by if x >= threshold else x for x in word)


def _swap(word: Sequence[int], a: int, b: int) -> Word:
    return tuple(b if x == a else a if x == b else x for x in word)


def _remove(word: Sequence[int], *letters: int) -> Word:
    return tuple(x for x in word if x not in letters)


# -- eta: moving the factor 21 ------------------------------------------------

def eta(p: Sequence[int]) -> Word:
    """GI member not ending in 2 -> GI member ending in 2, same first letter (21 -> 12 when it starts the word)."""
    p = _in_gi(p)
    _require(p[-1] != 2, f"{p} already ends with 2")
    t = p.index(1)
    _require(t > 0 and p[t - 1] == 2, f"{p} has no factor 21")
    return p[: t - 1] + p[t:] + (2,)


def eta_inv(q: Sequence[int]) -> Word:
    q = _in_gi(q)
    _require(q[-1] == 2, f"{q} does not end with 2")
    body = q[:-1]
    t = body.index(1)
    return body[:t] + (2,) + body[t:]


# -- f on GI(2n, 3) not ending in 2 --------------------------------------------

def f_map(p: Sequence[int]) -> Word:
    p = _in_gi(p)
    _require(p[0] == 3 and p[-1] != 2, f"{p} is not in GI(2n,3) with last letter != 2")
    if p[-2:] == (2, 1):
        return P.reduced_form(p[:-2])
    t = p.index(1)
    _require(p[t - 1] == 2, f"{p} has no factor 21")
    return (1,) + p[t + 1:] + p[: t - 1] + (2,)


def f_inv(q: Sequence[int], two_n: int) -> Word:
    """Preimage in GI(two_n, 3); ``q`` is in GI(two_n, 1) or GI(two_n - 2, 1)."""
    q = _in_gi(q) if len(q) >= 2 else _perm(q)
    _require(q[:1] == (1,), f"{q} does not start with 1")
    if len(q) == two_n - 2:
        return (3,) + P.shift(q[1:], 2) + (2, 1)
    _require(len(q) == two_n and q[-1] == 2, f"{q} is not in GI({two_n},1)")
    t = q.index(3)
    return q[t:-1] + (2, 1) + q[1:t]


# -- g: advancing 2n-1 ---------------------------------------------------------

def g_adv(p: Sequence[int]) -> Word:
    p = _in_gi(p)
    m = len(p) - 1
    _require(p[0] != m, f"{p} already starts with {m}")
    return (m,) + _remove(p, m)


def g_inv(q: Sequence[int]) -> Word:
    q = _in_gi(q)
    m = len(q) - 1
    _require(q[0] == m, f"{q} does not start with {m}")
    rest = q[1:]
    t = rest.index(m + 1) + 1
    return rest[:t] + (m,) + rest[t:]


# -- varphi: GI(2n, 2k+2) -> GI(2n, 2k) u U_{i>=k} GI(2n-2, 2i) -----------------

def _check_varphi_domain(n: int, k: int, p: Word) -> None:
    _require(n >= 2 and 0 <= k < n, f"varphi needs n >= 2 and 0 <= k < n, got ({n}, {k})")
    _require(len(p) == 2 * n and p[0] == 2 * k + 2, f"{p} is not in GI({2 * n},{2 * k + 2})")


def _varphi_check(n: int, k: int, p: Word) -> Word:
    """varphi on members ending in 2, for 1 < k < n."""
    a, b, c = 2 * k, 2 * k + 1, 2 * k + 2
    if p[1] <= a - 1:
        return _swap(p, a, c)
    if p[1] == a:
        t = p.index(b)
        s = t
        while p[s - 1] > c:
            s -= 1
        beta = p[s:t]
        nxt = p[t + 1]
        head = p[1:s]
        tail = p[t + 1:]
        if nxt > b:
            return head + beta + (c, b) + tail
        return head + (c, b) + beta + tail
    # p[1] == 2k+1
    if p[2] >= a and p[2] % 2 == 0:
        return P.reduced_form(p[2:])
    j = p.index(a)
    return (a,) + p[2:j] + (c, b) + p[j + 1:]


def _varphi_check_inv(n: int, k: int, q: Word) -> Word:
    a, b, c = 2 * k, 2 * k + 1, 2 * k + 2
    if len(q) == 2 * n - 2:
        return (c, b) + lift(q, b)
    if c in q and q.index(c) + 1 < len(q) and q[q.index(c) + 1] == b:
        t = q.index(c)
        y = q[t + 2]
        if y < c:  # case 3b
            return (c, b) + q[1:t] + (a,) + q[t + 2:]
        x = q[t - 1]
        if x > c:  # case 2a
            return (c,) + q[:t] + q[t + 1:]
        # case 2b: beta is the run of letters > 2k+2 after 2k+1
        e = t + 2
        while e < len(q) and q[e] > c:
            e += 1
        beta = q[t + 2:e]
        return (c,) + q[:t] + beta + (b,) + q[e:]
    return _swap(q, a, c)


def _varphi1_check(n: int, p: Word) -> Word:
    """varphi_{n,1} on GI(2n, 4) members ending in 2."""
    if p[1] == 1:
        t = p.index(3)
        return P.reduced_form(p[2:t] + (2, 1) + p[t + 1:-1])
    if p[2] == 1:
        return P.reduced_form((2, 1) + p[3:-1])
    return P.reduced_form(p[2:])


def _varphi1_check_inv(n: int, q: Word) -> Word:
    if q[0] == 2:
        return (4, 3, 1) + lift(q[2:], 3) + (2,)
    if q[-1] == 2:
        return (4, 3) + lift(q, 3)
    t = q.index(1)
    _require(q[t - 1] == 2, f"{q} has no factor 21")
    return (4, 1) + lift(q[: t - 1], 3) + (3,) + lift(q[t + 1:], 3) + (2,)


def varphi(n: int, k: int, p: Sequence[int]) -> Word:
    p = _in_gi(p)
    _check_varphi_domain(n, k, p)
    if k == 0:
        return P.reduced_form(p[2:])
    if k == 1:
        if p[-1] == 2:
            return _varphi1_check(n, p)
        return varphi_inv(n, 0, _varphi1_check(n, eta(p)))
    if p[-1] == 2:
        return _varphi_check(n, k, p)
    return eta_inv(_varphi_check(n, k, eta(p)))


def varphi_inv(n: int, k: int, q: Sequence[int]) -> Word:
    q = _in_gi(q)
    _require(n >= 2 and 0 <= k < n, f"varphi needs n >= 2 and 0 <= k < n, got ({n}, {k})")
    if len(q) == 2 * n - 2:
        _require(q[0] % 2 == 0 and q[0] >= max(2 * k, 2), f"{q} is not in the image of varphi_({n},{k})")
    else:
        _require(len(q) == 2 * n and q[0] == 2 * k and k >= 1, f"{q} is not in the image of varphi_({n},{k})")
    if k == 0:
        return (2, 1) + P.shift(q, 2)
    if k == 1:
        if len(q) == 2 * n - 2:
            return _varphi1_check_inv(n, q)
        return eta_inv(_varphi1_check_inv(n, varphi(n, 0, q)))
    if q[-1] == 2:
        return _varphi_check_inv(n, k, q)
    return eta_inv(_varphi_check_inv(n, k, eta(q)))


# -- tau on D3(2n, 2k), k >= 2 ---------------------------------------------------

def tau(p: Sequence[int]) -> Word:
    p = _in_d3(p)
    _require((leftmost_even(p) or 0) >= 4 and p[1] == 3, f"{p} is not in D3(2n,2k), k>=2, with second letter 3")
    rest = (p[0],) + p[2:]
    t = rest.index(2) + 1
    return rest[:t] + (3,) + rest[t:]


def tau_inv(q: Sequence[int]) -> Word:
    q = _in_d3(q)
    _require((leftmost_even(q) or 0) >= 4 and q[1] != 3, f"{q} is not in D3(2n,2k), k>=2, with second letter != 3")
    t = q.index(3)
    _require(q[t - 1] == 2, f"{q}: 3 does not follow 2")
    rest = _remove(q, 3)
    return (rest[0], 3) + rest[1:]


# -- phi: D3(2n, 2k+2) -> D3(2n, 2k) u U_{i>=k} D3(2n-2, 2i) ---------------------

def _phi_check(n: int, k: int, p: Word) -> Word:
    """phi on members with second letter 3, for 1 < k < n."""
    a, b, c = 2 * k, 2 * k + 1, 2 * k + 2
    pc = p.index(c)
    prefix = p[:pc]
    e = pc + 1
    while e < len(p) and p[e] < a:
        e += 1
    beta = p[pc + 1:e]
    pa = p.index(a)
    middle = p[e:pa]
    rest = p[pa + 1:]
    if rest[:1] == (b,):
        return prefix + (a, b) + middle + (c,) + beta + rest[1:]
    if prefix[-1] == b:
        if not beta:
            return P.reduced_form(prefix[:-1] + middle + (a,) + rest)
        g = len(middle)
        while g > 0 and middle[g - 1] > c:
            g -= 1
        gamma = middle[g:]
        return prefix[:-1] + (a,) + gamma + beta + middle[:g] + (b, c) + rest
    return _swap(p, a, c)


def _phi_check_inv(n: int, k: int, q: Word) -> Word:
    a, b, c = 2 * k, 2 * k + 1, 2 * k + 2
    if len(q) == 2 * n - 2:
        w = lift(q, b)
        t = next(t for t, x in enumerate(w) if x >= a)
        return w[:t] + (b, c) + w[t:]
    ta = q.index(a)
    if q[ta + 1: ta + 2] == (b,):  # case 2
        tc = q.index(c)
        e = tc + 1
        while e < len(q) and q[e] < a:
            e += 1
        return q[:ta] + (c,) + q[tc + 1:e] + q[ta + 2:tc] + (a, b) + q[e:]
    tb = q.index(b)
    if q[tb + 1: tb + 2] == (c,):  # case 3b
        g = ta + 1
        while q[g] > c:
            g += 1
        e = g
        while q[e] < a:
            e += 1
        gamma, beta, mid = q[ta + 1:g], q[g:e], q[e:tb]
        return q[:ta] + (b, c) + beta + mid + gamma + (a,) + q[tb + 2:]
    return _swap(q, a, c)


def phi_diii(n: int, k: int, p: Sequence[int]) -> Word:
    p = _in_d3(p)
    _require(n >= 2 and 0 <= k < n, f"phi needs n >= 2 and 0 <= k < n, got ({n}, {k})")
    _require(len(p) == 2 * n and leftmost_even(p) == 2 * k + 2, f"{p} is not in D3({2 * n},{2 * k + 2})")
    if k == 0:
        return P.reduced_form(p[2:])
    if k == 1:
        if p[1] == 3:
            return P.reduced_form((1,) + p[3:])
        return phi_diii_inv(n, 0, phi_diii(n, 1, tau_inv(p)))
    if p[1] == 3:
        return _phi_check(n, k, p)
    return tau(_phi_check(n, k, tau_inv(p)))


def phi_diii_inv(n: int, k: int, q: Sequence[int]) -> Word:
    q = _in_d3(q)
    _require(n >= 2 and 0 <= k < n, f"phi needs n >= 2 and 0 <= k < n, got ({n}, {k})")
    lead = leftmost_even(q)
    if len(q) == 2 * n - 2:
        _require(lead >= max(2 * k, 2), f"{q} is not in the image of phi_({n},{k})")
    else:
        _require(len(q) == 2 * n and k >= 1 and lead == 2 * k, f"{q} is not in the image of phi_({n},{k})")
    if k == 0:
        return (1, 2) + P.shift(q, 2)
    if k == 1:
        if len(q) == 2 * n - 2:
            return (1, 3, 4) + lift(q[1:], 3)
        return tau(phi_diii_inv(n, 1, phi_diii(n, 0, q)))
    if q[1] == 3:
        return _phi_check_inv(n, k, q)
    return tau(_phi_check_inv(n, k, tau_inv(q)))


# -- Phi: GI(2n, 2k) -> D3(2n, 2k), defined recursively ----------------------------

def capital_phi(n: int, k: int, p: Sequence[int]) -> Word:
    p = _in_gi(p)
    _require(1 <= k <= n and len(p) == 2 * n and p[0] == 2 * k, f"{p} is not in GI({2 * n},{2 * k})")
    if n == 1:
        return (1, 2)
    q = varphi(n, k - 1, p)
    if len(q) == 2 * n:
        r = capital_phi(n, k - 1, q)
    else:
        r = capital_phi(n - 1, q[0] // 2, q)
    return phi_diii_inv(n, k - 1, r)


def capital_phi_inv(n: int, k: int, s: Sequence[int]) -> Word:
    s = _in_d3(s)
    _require(1 <= k <= n and len(s) == 2 * n and leftmost_even(s) == 2 * k, f"{s} is not in D3({2 * n},{2 * k})")
    if n == 1:
        return (2, 1)
    r = phi_diii(n, k - 1, s)
    if len(r) == 2 * n:
        q = capital_phi_inv(n, k - 1, r)
    else:
        q = capital_phi_inv(n - 1, leftmost_even(r) // 2, r)
    return varphi_inv(n, k - 1, q)


# -- theta: CO(2n+2) -> D(2n) ------------------------------------------------------

def theta(p: Sequence[int]) -> Word:
    p = _perm(p)
    _require(len(p) >= 4 and len(p) % 2 == 0 and is_member(FamilyId.COLLAPSED, p), f"{p} is not collapsed")
    n = len(p) // 2 - 1
    out = [0] * (2 * n)
    for i in range(1, n + 1):
        out[2 * i - 2] = p[n + i] - 1
        out[2 * i - 1] = p[i] - 1
    return tuple(out)


def theta_inv(s: Sequence[int]) -> Word:
    s = _perm(s)
    _require(len(s) >= 2 and len(s) % 2 == 0 and is_member(FamilyId.DPERM, s), f"{s} is not a D-permutation")
    n = len(s) // 2
    out = [0] * (2 * n + 2)
    out[0], out[-1] = 1, 2 * n + 2
    for i in range(1, n + 1):
        out[n + i] = s[2 * i - 2] + 1
        out[i] = s[2 * i - 1] + 1
    return tuple(out)


# -- Psi: E(2n) -> GI(2n) ------------------------------------------------------------

def psi(p: Sequence[int]) -> Word:
    p = _perm(p)
    _require(len(p) % 2 == 0 and is_member(FamilyId.EPERM, p), f"{p} is not an E-permutation")
    form = P.to_cycles(P.inverse(p), P.MinimaOrder.DECREASING)
    return tuple(x for c in form.cycles for x in c)


def _split_at_lrmin(word: Word) -> list[Word]:
    cycles: list[list[int]] = []
    low = None
    for x in word:
        if low is None or x < low:
            low = x
            cycles.append([x])
        else:
            cycles[-1].append(x)
    return [tuple(c) for c in cycles]


def psi_inv(q: Sequence[int]) -> Word:
    q = _in_gi(q)
    return P.inverse(P.from_cycles(_split_at_lrmin(q)))


# -- vartheta: GI(2n) -> D(2n) ------------------------------------------------------

def _is_even_double_ascent(c: list[int], i: int) -> bool:
    x = c[i]
    return x % 2 == 0 and c[i - 1] < x < c[(i + 1) % len(c)]


def _shift_right(c: list[int]) -> list[int]:
    c = list(c)
    i = 1
    while i < len(c):
        if _is_even_double_ascent(c, i):
            x = c.pop(i)
            t = i
            while t < len(c) and x < c[t]:
                t += 1
            c.insert(t, x)
            i = 1
        else:
            i += 1
    return c


def _shift_left(c: list[int]) -> list[int]:
    c = list(c)
    i = len(c) - 1
    while i >= 1:
        x = c[i]
        if x % 2 == 0 and c[i - 1] > x:
            c.pop(i)
            t = i - 1
            while t > 0 and c[t - 1] > x:
                t -= 1
            c.insert(t, x)
            i = len(c) - 1
        else:
            i -= 1
    return c


def vartheta(p: Sequence[int]) -> Word:
    p = _in_gi(p)
    cycles = []
    for c in _split_at_lrmin(p):
        rev = [c[0]] + list(reversed(c[1:]))
        cycles.append(tuple(_shift_right(rev)))
    return P.from_cycles(cycles)


def vartheta_inv(s: Sequence[int]) -> Word:
    s = _perm(s)
    _require(len(s) % 2 == 0 and is_member(FamilyId.DPERM, s), f"{s} is not a D-permutation")
    out: list[int] = []
    for c in P.to_cycles(s, P.MinimaOrder.DECREASING).cycles:
        c = _shift_left(list(c))
        out.extend([c[0]] + list(reversed(c[1:])))
    return tuple(out)


def capital_theta(p: Sequence[int]) -> Word:
    return vartheta_inv(theta(p))


def capital_theta_inv(q: Sequence[int]) -> Word:
    return theta_inv(vartheta(q))
