"""The Iwahori-Hecke algebra H_n(q) with symbolic Laurent coefficients.

Elements are finite sums sum_w c_w(q) T_w over the permutation basis.
Right multiplication by a generator follows
    T_w T_{s_i} = T_{w s_i}                       if l(w s_i) > l(w)
    T_w T_{s_i} = q T_{w s_i} + (q - 1) T_w       otherwise,
and general products iterate this along reduced words.  Identity checks on
these symbolic elements certify statements for all q at once.
"""

from __future__ import annotations

from fractions import Fraction

from .qpoly import LaurentPoly, ONE, Q, QM1, qint
from .symmetric import Permutation, all_permutations, min_coset_reps, young_subgroup


class SizeMismatch(ValueError):
    pass


class HeckeElement:
    """Formal sum of T_w with LaurentPoly coefficients, all w in S_n."""

    __slots__ = ("n", "terms")

    def __init__(self, n, terms=None):
        self.n = n
        clean = {}
        if terms:
            for w, c in terms.items():
                if not c.is_zero():
                    if w.n != n:
                        raise SizeMismatch("permutation size != n")
                    clean[w] = c
        self.terms = clean

    @staticmethod
    def zero(n):
        return HeckeElement(n)

    @staticmethod
    def one(n):
        return HeckeElement(n, {Permutation.identity(n): ONE})

    @staticmethod
    def t_word(word, n):
        """T_{s_{i1}} T_{s_{i2}} ... (a single T_w when the word is reduced)."""
        return HeckeElement.one(n).mul_word(word)

    @staticmethod
    def t_perm(w):
        return HeckeElement(w.n, {w: ONE})

    def __add__(self, other):
        if self.n != other.n:
            raise SizeMismatch("different n")
        out = dict(self.terms)
        for w, c in other.terms.items():
            s = out.get(w, LaurentPoly.zero()) + c
            if s.is_zero():
                out.pop(w, None)
            else:
                out[w] = s
        res = HeckeElement(self.n)
        res.terms = out
        return res

    def __neg__(self):
        res = HeckeElement(self.n)
        res.terms = {w: -c for w, c in self.terms.items()}
        return res

    def __sub__(self, other):
        return self + (-other)

    def scale(self, poly):
        if not isinstance(poly, LaurentPoly):
            poly = LaurentPoly.const(poly)
        if poly.is_zero():
            return HeckeElement.zero(self.n)
        res = HeckeElement(self.n)
        res.terms = {w: c * poly for w, c in self.terms.items()}
        return res

    def mul_gen(self, i):
        """Right multiplication by T_{s_i}."""
        if not 1 <= i <= self.n - 1:
            raise IndexError(f"generator {i} out of range")
        out = {}

        def add(w, c):
            s = out.get(w)
            s = c if s is None else s + c
            if s.is_zero():
                out.pop(w, None)
            else:
                out[w] = s

        for w, c in self.terms.items():
            wsi = w.apply_gen_right(i)
            if w.one_line[i - 1] < w.one_line[i]:  # length goes up
                add(wsi, c)
            else:
                add(wsi, c * Q)
                add(w, c * QM1)
        res = HeckeElement(self.n)
        res.terms = out
        return res

    def mul_word(self, word):
        out = self
        for i in word:
            out = out.mul_gen(i)
        return out

    def __mul__(self, other):
        if isinstance(other, (LaurentPoly, int, Fraction)):
            return self.scale(other)
        if self.n != other.n:
            raise SizeMismatch("different n")
        total = HeckeElement.zero(self.n)
        for w, c in other.terms.items():
            total = total + self.mul_word(w.reduced_word()).scale(c)
        return total

    def __rmul__(self, other):
        if isinstance(other, (LaurentPoly, int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        return (isinstance(other, HeckeElement)
                and self.n == other.n and self.terms == other.terms)

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = [f"({c})*T{w}" for w, c in
                sorted(self.terms.items(), key=lambda kv: kv[0].lehmer_rank())]
        return " + ".join(bits)

    def star(self):
        """Anti-involution T_w -> T_{w^-1}."""
        res = HeckeElement(self.n)
        res.terms = {w.inverse(): c for w, c in self.terms.items()}
        return res

    def tau(self):
        """Algebra automorphism induced by s_i -> s_{n-i}."""
        n = self.n
        flip = Permutation([n + 1 - k for k in range(1, n + 1)])  # w_0
        res = HeckeElement(n)
        res.terms = {flip * w * flip: c for w, c in self.terms.items()}
        return res

    def eval_coeffs(self, q0):
        """Mapping w -> rational coefficient at q0."""
        return {w: c.eval(q0) for w, c in self.terms.items()}

    def to_json(self):
        ws = sorted(self.terms, key=Permutation.lehmer_rank)
        return {"n": self.n,
                "terms": [{"perm": list(w.one_line),
                           "coeff": self.terms[w].to_json()} for w in ws]}


# -- shuffle operators ------------------------------------------------

def b2r(n):
    """B_n(q) = sum_{i=1}^n T_{s_{n-1}} T_{s_{n-2}} ... T_{s_i}."""
    total = HeckeElement.zero(n)
    for i in range(1, n + 1):
        total = total + HeckeElement.t_word(range(n - 1, i - 1, -1), n)
    return total


def r2b(n):
    """B*_n(q) = sum_{j=1}^n T_{s_j} T_{s_{j+1}} ... T_{s_{n-1}}."""
    total = HeckeElement.zero(n)
    for j in range(1, n + 1):
        total = total + HeckeElement.t_word(range(j, n), n)
    return total


def r2r(n):
    """R_n(q) = B*_n(q) B_n(q), the q-random-to-random element."""
    return r2b(n) * b2r(n)


def top_ops(n):
    """(T_n(q), T*_n(q)): q-top-to-random and q-random-to-top."""
    t = HeckeElement.zero(n)
    tstar = HeckeElement.zero(n)
    for i in range(1, n + 1):
        t = t + HeckeElement.t_word(range(1, i), n)
        tstar = tstar + HeckeElement.t_word(range(i - 1, 0, -1), n)
    return t, tstar


def transposition_word(i, k):
    """Reduced word for the transposition (i, k), i < k."""
    return tuple(range(i, k)) + tuple(range(k - 2, i - 1, -1))


def jucys_murphy_scaled(n, k):
    """q^k J_k(q) = sum_{i<k} q^i T_{(i,k)} (polynomial form)."""
    total = HeckeElement.zero(n)
    for i in range(1, k):
        total = total + HeckeElement.t_word(transposition_word(i, k), n).scale(
            LaurentPoly.q_power(i))
    return total


# -- coset sums -------------------------------------------------------

def m_alpha(alpha):
    """m_alpha = sum of T_w over the Young subgroup S_alpha."""
    total = HeckeElement.zero(alpha.n)
    for w in young_subgroup(alpha):
        total = total + HeckeElement.t_perm(w)
    return total


def x_alpha(alpha):
    """x_alpha = sum of T_w over the minimal coset representatives X_alpha."""
    total = HeckeElement.zero(alpha.n)
    for w in min_coset_reps(alpha):
        total = total + HeckeElement.t_perm(w)
    return total


def b2r_embedded(k, n):
    """B_k(q) inside H_n(q) (generators with index < k)."""
    total = HeckeElement.zero(n)
    for i in range(1, k + 1):
        total = total + HeckeElement.t_word(range(k - 1, i - 1, -1), n)
    return total


def r2b_embedded(k, n):
    total = HeckeElement.zero(n)
    for j in range(1, k + 1):
        total = total + HeckeElement.t_word(range(j, k), n)
    return total


def c_op(j, n):
    """C_j^(n) = B_{j+1}(q) B_{j+2}(q) ... B_n(q) (identity when j = n)."""
    total = HeckeElement.one(n)
    for k in range(j + 1, n + 1):
        total = total * b2r_embedded(k, n)
    return total


# -- matrices and identity checks -------------------------------------

def regular_rep_matrix(a, q0):
    """Matrix of right multiplication by a on the T_w basis at q = q0.

    Row/column indices are Lehmer ranks; row r holds T_{w_r} * a.
    """
    n = a.n
    perms = all_permutations(n)
    size = len(perms)
    rows = []
    for w in perms:
        prod = HeckeElement.t_perm(w) * a
        row = [Fraction(0)] * size
        for u, c in prod.terms.items():
            row[u.lehmer_rank()] = c.eval(q0)
        rows.append(row)
    return rows


def recursion_check(n):
    """B_n R_n = (q R_{n-1} + [n]_q + q^n J_n) B_n, symbolically."""
    bn = b2r(n)
    lhs = bn * r2r(n)
    inner = (r2b_embedded(n - 1, n) * b2r_embedded(n - 1, n)).scale(Q)
    inner = inner + HeckeElement.one(n).scale(qint(n))
    inner = inner + jucys_murphy_scaled(n, n)
    rhs = inner * bn
    return lhs == rhs


def intermediate_recursion_check(n):
    """B_n B*_n = B*_{n-1} T_{s_{n-1}} B_{n-1} + [n]_q + q^n J_n."""
    lhs = b2r(n) * r2b(n)
    rhs = (r2b_embedded(n - 1, n).mul_gen(n - 1) * b2r_embedded(n - 1, n)
           + HeckeElement.one(n).scale(qint(n))
           + jucys_murphy_scaled(n, n))
    return lhs == rhs


def annihilator_check(a, n):
    """prod over j in [0,n], j != 1, of (a - [n-j]_q) equals 0."""
    prod = HeckeElement.one(n)
    for j in range(0, n + 1):
        if j == 1:
            continue
        prod = prod * (a - HeckeElement.one(n).scale(qint(n - j)))
    return prod.is_zero()
