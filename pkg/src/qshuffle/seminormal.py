"""Word modules W^lambda and Specht modules at an exact rational q0.

The word module has basis the words of content lambda (letter i appears
lambda_i times); the right action of a generator on a word w is
    w . T_{s_i} = q w                      if w_i = w_{i+1}
    w . T_{s_i} = w s_i                    if w_i < w_{i+1}
    w . T_{s_i} = q (w s_i) + (q-1) w      if w_i > w_{i+1}.
Young idempotents are Lagrange interpolation products in the Jucys-Murphy
elements, applied to vectors factor by factor; seminormal units are
w_t = word(t) . p_t and span the Specht module S^lambda.

All arithmetic is exact rational at an admissible evaluation point q0.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from . import linalg
from .qpoly import qint
from .symmetric import Permutation
from .tableaux import (Partition, ShapeMismatch, StandardTableau, enumerate_syt,
                       superstandard)
from .hecke import transposition_word


class InadmissibleQ(ValueError):
    pass


def check_admissible(q0, n):
    """q0 != 0 and [m]_{q0} != 0 for 2 <= m <= n (semisimple H_n(q0))."""
    q0 = Fraction(q0)
    if q0 == 0:
        raise InadmissibleQ("q0 = 0")
    for m in range(2, n + 1):
        if qint(m).eval(q0) == 0:
            raise InadmissibleQ(f"[{m}]_q vanishes at q0 = {q0}")
    return q0


def content_classes(m):
    """Classical contents an entry m can have: (-m, m), minus 0 for m in {2,3}."""
    out = [d for d in range(-m + 1, m)]
    if m in (2, 3):
        out.remove(0)
    return out


def content_words(lam):
    """All words with letter i appearing lambda_i times, lex sorted."""
    letters = [i + 1 for i, p in enumerate(lam.parts) for _ in range(p)]
    return sorted(set(itertools.permutations(letters)))


class WordModuleRep:
    """W^lambda over exact rationals at q0, with sparse generator action."""

    def __init__(self, lam, q0):
        self.lam = lam
        self.n = lam.size
        self.q0 = check_admissible(q0, self.n)
        self.basis = content_words(lam)
        self.index = {w: i for i, w in enumerate(self.basis)}
        self.dim = len(self.basis)
        q = self.q0
        qm1 = q - 1
        # gen_rows[i][row] = [(col, coeff), ...] for e_row . T_{s_i}
        self.gen_rows = {}
        for i in range(1, self.n):
            rows = []
            for w in self.basis:
                a, b = w[i - 1], w[i]
                if a == b:
                    rows.append([(self.index[w], q)])
                else:
                    swapped = w[:i - 1] + (b, a) + w[i + 1:]
                    j = self.index[swapped]
                    if a < b:
                        rows.append([(j, Fraction(1))])
                    else:
                        rows.append([(j, q), (self.index[w], qm1)])
            self.gen_rows[i] = rows
        self._jm_rows = {}

    # -- vector helpers ----------------------------------------------

    def basis_vector(self, word):
        v = [Fraction(0)] * self.dim
        v[self.index[tuple(word)]] = Fraction(1)
        return v

    def apply_gen(self, v, i):
        rows = self.gen_rows[i]
        out = [Fraction(0)] * self.dim
        for idx, x in enumerate(v):
            if x:
                for j, c in rows[idx]:
                    out[j] += x * c
        return out

    def apply_word(self, v, word):
        for i in word:
            v = self.apply_gen(v, i)
        return v

    def apply_hecke(self, v, elem):
        """v . a for a HeckeElement a (same n)."""
        if elem.n != self.n:
            raise ShapeMismatch("HeckeElement size != n")
        out = [Fraction(0)] * self.dim
        for w, coeff in elem.terms.items():
            c = coeff.eval(self.q0)
            img = self.apply_word(v, w.reduced_word())
            for j in range(self.dim):
                if img[j]:
                    out[j] += c * img[j]
        return out

    def jm_rows(self, m):
        """Sparse rows of J_m(q0) = sum_{i<m} q0^{i-m} T_{(i,m)}."""
        if m not in self._jm_rows:
            rows = [dict() for _ in range(self.dim)]
            for i in range(1, m):
                scale = self.q0 ** (i - m)
                word = transposition_word(i, m)
                for idx in range(self.dim):
                    v = [Fraction(0)] * self.dim
                    v[idx] = Fraction(1)
                    img = self.apply_word(v, word)
                    row = rows[idx]
                    for j, x in enumerate(img):
                        if x:
                            row[j] = row.get(j, Fraction(0)) + scale * x
            self._jm_rows[m] = [sorted((j, c) for j, c in row.items() if c)
                                for row in rows]
        return self._jm_rows[m]

    def apply_jm(self, v, m):
        rows = self.jm_rows(m)
        out = [Fraction(0)] * self.dim
        for idx, x in enumerate(v):
            if x:
                for j, c in rows[idx]:
                    out[j] += x * c
        return out

    def jm_matrix(self, m):
        rows = self.jm_rows(m)
        out = linalg.zeros(self.dim, self.dim)
        for idx, row in enumerate(rows):
            for j, c in row:
                out[idx][j] = c
        return out

    def apply_idempotent(self, v, t):
        """v . p_t for a straight standard tableau t (entries 1..t.n <= n)."""
        for m in range(1, t.n + 1):
            cm = t.content_of(m)
            cm_val = qint(cm).eval(self.q0)
            for d in content_classes(m):
                if d == cm:
                    continue
                d_val = qint(d).eval(self.q0)
                denom = cm_val - d_val
                if denom == 0:
                    raise InadmissibleQ(
                        f"idempotent denominator vanishes at q0 = {self.q0}")
                jv = self.apply_jm(v, m)
                v = [(jv[j] - d_val * v[j]) / denom for j in range(self.dim)]
        return v

    def apply_p_lambda(self, v, lam=None):
        """v . p_lambda = sum over t in SYT(lambda) of v . p_t."""
        lam = lam or self.lam
        out = [Fraction(0)] * self.dim
        for t in enumerate_syt(lam):
            img = self.apply_idempotent(v, t)
            for j in range(self.dim):
                out[j] += img[j]
        return out

    # -- dense matrices ----------------------------------------------

    def matrix_of(self, apply_fn):
        """Dense matrix whose row idx is apply_fn(e_idx)."""
        out = []
        for idx in range(self.dim):
            v = [Fraction(0)] * self.dim
            v[idx] = Fraction(1)
            out.append(apply_fn(v))
        return out

    def gen_matrix(self, i):
        out = linalg.zeros(self.dim, self.dim)
        for idx, row in enumerate(self.gen_rows[i]):
            for j, c in row:
                out[idx][j] = c
        return out

    def idempotent_matrix(self, t):
        return self.matrix_of(lambda v: self.apply_idempotent(v, t))

    def hecke_matrix(self, elem):
        return self.matrix_of(lambda v: self.apply_hecke(v, elem))


class SpechtRep:
    """S^lambda realized inside W^lambda by seminormal units."""

    def __init__(self, lam, q0):
        self.lam = lam
        self.q0 = Fraction(q0)
        self.word_module = WordModuleRep(lam, q0)
        self.tableaux = enumerate_syt(lam)
        self.units = []
        for t in self.tableaux:
            v = self.word_module.basis_vector(t.word())
            self.units.append(self.word_module.apply_idempotent(v, t))
        self.dim = len(self.units)

    def coords(self, v):
        """Coordinates of v in the unit basis, or None if outside the span."""
        return linalg.solve_in_span(self.units, v)

    def gen_action_matrix(self, i):
        """Matrix of T_{s_i} on S^lambda in the seminormal unit basis."""
        rows = []
        for u in self.units:
            img = self.word_module.apply_gen(u, i)
            coords = self.coords(img)
            if coords is None:
                raise ArithmeticError("unit span is not generator-stable")
            rows.append(coords)
        return rows

    def hecke_action_matrix(self, elem):
        rows = []
        for u in self.units:
            img = self.word_module.apply_hecke(u, elem)
            coords = self.coords(img)
            if coords is None:
                raise ArithmeticError("unit span is not stable under element")
            rows.append(coords)
        return rows


def seminormal_units(lam, q0):
    return SpechtRep(lam, q0)


def dipper_james_action(t, i, q0):
    """Expected w_t . T_{s_i} from the four-case seminormal formula.

    Returns a mapping tableau -> Fraction coefficient.  q = t . s_i,
    rho = content(t, i) - content(q, i).
    """
    q0 = Fraction(q0)
    ri, ci = t.cell_of(i)
    rj, cj = t.cell_of(i + 1)
    if ri == rj:
        return {t: q0}
    if ci == cj:
        return {t: Fraction(-1)}
    other = t.apply_gen_by_value(i)
    rho = t.content_of(i) - other.content_of(i)
    rho_val = qint(rho).eval(q0)
    out = {t: Fraction(-1) / rho_val}
    if other.dominance_leq(t):
        out[other] = Fraction(1)
    else:
        out[other] = (q0 * qint(rho + 1).eval(q0) * qint(rho - 1).eval(q0)
                      / rho_val ** 2)
    return out


def phi_map(t_skew):
    """The concatenation map Phi_t: W^mu -> W^lambda on basis words.

    word(s) . Phi_t appends the row indices of the entries |mu|+1..|lambda|
    of the skew tableau t.  Returns (suffix, mapper) where mapper sends a
    word of content mu to a word of content lambda.
    """
    lo = t_skew.shape.inner.size
    hi = t_skew.shape.outer.size
    suffix = tuple(t_skew.row_of(k) for k in range(lo + 1, hi + 1))
    return suffix


def phi_apply(v_mu, rep_mu, rep_lam, t_skew):
    """Image in W^lambda of a vector of W^mu under Phi_{t_skew}."""
    if rep_mu.lam != t_skew.shape.inner:
        raise ShapeMismatch("inner shape != mu")
    if rep_lam.lam != t_skew.shape.outer:
        raise ShapeMismatch("outer shape != lambda")
    suffix = phi_map(t_skew)
    out = [Fraction(0)] * rep_lam.dim
    for idx, x in enumerate(v_mu):
        if x:
            out[rep_lam.index[rep_mu.basis[idx] + suffix]] += x
    return out
