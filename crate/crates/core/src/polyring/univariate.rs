use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Dense univariate polynomial over the rationals, lowest degree first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct UniPolynomial {
    coeffs: Vec<BigRational>,
}

impl UniPolynomial {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UniPolynomial { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigRational::from_integer(c.into())).collect())
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::new(vec![c])
    }

    /// `t - root`
    pub fn linear_root(root: BigRational) -> Self {
        Self::new(vec![-root, BigRational::one()])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// True for nonzero constants and for zero.
    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigRational {
        self.coeffs.get(i).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn leading(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    pub fn eval(&self, t: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * t + c;
        }
        acc
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigRational::from_integer(i.into()))
                .collect(),
        )
    }

    /// Monic scalar multiple; zero stays zero.
    pub fn monic(&self) -> Self {
        match self.leading() {
            Some(l) => {
                let inv = l.recip();
                self.scale(&inv)
            }
            None => Self::zero(),
        }
    }

    /// Euclidean division. Panics on a zero divisor.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        let dd = d.degree().expect("division by zero polynomial");
        let lead_inv = d.coeffs[dd].recip();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Self::zero(), self.clone());
        }
        let mut quot = vec![BigRational::zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let c = &rem[i + dd] * &lead_inv;
            if !c.is_zero() {
                for (j, dc) in d.coeffs.iter().enumerate() {
                    rem[i + j] -= &c * dc;
                }
            }
            quot[i] = c;
        }
        rem.truncate(dd);
        (Self::new(quot), Self::new(rem))
    }

    /// Quotient of an exact division; panics if the remainder is nonzero.
    pub fn exact_div(&self, d: &Self) -> Self {
        let (q, r) = self.div_rem(d);
        assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    pub fn rem(&self, d: &Self) -> Self {
        self.div_rem(d).1
    }

    /// Monic greatest common divisor (zero only if both inputs are zero).
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Extended gcd: returns `(g, s, t)` with `s*self + t*other = g`, `g` monic.
    pub fn ext_gcd(&self, other: &Self) -> (Self, Self, Self) {
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Self::one(), Self::zero());
        let (mut t0, mut t1) = (Self::zero(), Self::one());
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            let s2 = &s0 - &(&q * &s1);
            let t2 = &t0 - &(&q * &t1);
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
            t0 = std::mem::replace(&mut t1, t2);
        }
        match r0.leading().cloned() {
            Some(l) => {
                let inv = l.recip();
                (r0.scale(&inv), s0.scale(&inv), t0.scale(&inv))
            }
            None => (r0, s0, t0),
        }
    }

    /// Inverse of `self` modulo `m`, when they are coprime.
    pub fn inverse_mod(&self, m: &Self) -> Option<Self> {
        let (g, s, _) = self.ext_gcd(m);
        (g.degree() == Some(0)).then(|| s.rem(m))
    }

    /// Product of the distinct irreducible factors, made monic.
    pub fn squarefree_part(&self) -> Self {
        if self.is_constant() {
            return self.monic();
        }
        let g = self.gcd(&self.derivative());
        self.exact_div(&g).monic()
    }

    /// Squarefree decomposition `self = c * prod_i s_i^i`, returned as the
    /// list of `(i, s_i)` with nonconstant monic `s_i`, pairwise coprime.
    pub fn squarefree_decomposition(&self) -> Vec<(usize, Self)> {
        // Yun's algorithm (characteristic zero)
        let mut out = Vec::new();
        if self.is_constant() {
            return out;
        }
        let f = self.monic();
        let d = f.derivative();
        let a0 = f.gcd(&d);
        let mut b = f.exact_div(&a0);
        let mut c = d.exact_div(&a0);
        let mut i = 1;
        loop {
            let bd = b.derivative();
            let diff = &c - &bd;
            if b.is_constant() {
                break;
            }
            let a = b.gcd(&diff);
            if !a.is_constant() {
                out.push((i, a.clone()));
            }
            b = b.exact_div(&a);
            c = diff.exact_div(&a);
            i += 1;
        }
        out
    }

    /// Number of times `t - root` divides `self`. Zero polynomial gives `usize::MAX`.
    pub fn root_multiplicity(&self, root: &BigRational) -> usize {
        if self.is_zero() {
            return usize::MAX;
        }
        let lin = Self::linear_root(root.clone());
        let mut p = self.clone();
        let mut k = 0;
        loop {
            let (q, r) = p.div_rem(&lin);
            if !r.is_zero() {
                return k;
            }
            p = q;
            k += 1;
        }
    }

    /// Number of times `d` divides `self` (nonconstant `d`).
    pub fn divisor_multiplicity(&self, d: &Self) -> usize {
        let mut p = self.clone();
        let mut k = 0;
        while !p.is_zero() {
            let (q, r) = p.div_rem(d);
            if !r.is_zero() {
                break;
            }
            p = q;
            k += 1;
        }
        k
    }

    /// Scalar multiple with coprime integer coefficients.
    pub fn integer_primitive(&self) -> Vec<BigInt> {
        let l = self.coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = self.coeffs.iter().map(|c| c.numer() * (&l / c.denom())).collect();
        let g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        if g.is_zero() {
            return ints;
        }
        ints.into_iter().map(|c| c / &g).collect()
    }

    /// All distinct rational roots, in increasing order.
    pub fn rational_roots(&self) -> Vec<BigRational> {
        if self.is_constant() {
            return Vec::new();
        }
        let mut p = self.squarefree_part();
        let mut roots = Vec::new();
        if p.coeffs[0].is_zero() {
            roots.push(BigRational::zero());
            p = p.exact_div(&Self::linear_root(BigRational::zero()));
        }
        if p.is_constant() {
            return roots;
        }
        // With integer coefficients a_n .. a_0, every rational root r has
        // a_n * r integral. Substituting t = s / a_n gives a monic integer
        // polynomial whose rational roots are integers.
        let ints = p.integer_primitive();
        let n = ints.len() - 1;
        let an = ints[n].clone();
        let mut monic = Vec::with_capacity(n + 1);
        let mut pw = BigInt::one();
        for i in (0..=n).rev() {
            // coefficient of s^i is a_i * a_n^(n-1-i) for i < n, 1 for i = n
            if i == n {
                monic.push(BigInt::one());
            } else {
                monic.push(&ints[i] * &pw);
                pw *= &an;
            }
        }
        monic.reverse();
        for s in integer_roots_monic(&monic) {
            roots.push(BigRational::new(s, an.clone()));
        }
        roots.sort();
        roots
    }
}

/// Integer roots of a squarefree monic integer polynomial (lowest first),
/// by Sturm-sequence bisection over integer intervals.
fn integer_roots_monic(coeffs: &[BigInt]) -> Vec<BigInt> {
    let p = UniPolynomial::new(coeffs.iter().cloned().map(BigRational::from_integer).collect());
    let sturm = sturm_sequence(&p);
    // Cauchy bound: |root| <= 1 + max |a_i|
    let bound = coeffs[..coeffs.len() - 1]
        .iter()
        .map(|c| c.abs())
        .max()
        .unwrap_or_else(BigInt::zero)
        + BigInt::one();
    let mut out = Vec::new();
    let lo = -bound.clone();
    let count = sign_changes(&sturm, &lo) - sign_changes(&sturm, &bound);
    isolate(&p, &sturm, lo, bound, count, &mut out);
    out
}

/// Recursively narrows `(lo, hi]`, which contains `count` real roots.
fn isolate(
    p: &UniPolynomial,
    sturm: &[UniPolynomial],
    lo: BigInt,
    hi: BigInt,
    count: usize,
    out: &mut Vec<BigInt>,
) {
    if count == 0 {
        return;
    }
    if &hi - &lo == BigInt::one() {
        if p.eval(&BigRational::from_integer(hi.clone())).is_zero() {
            out.push(hi);
        }
        return;
    }
    let mid: BigInt = (&lo + &hi).div_floor(&BigInt::from(2));
    let left = sign_changes(sturm, &lo) - sign_changes(sturm, &mid);
    isolate(p, sturm, lo, mid.clone(), left, out);
    isolate(p, sturm, mid, hi, count - left, out);
}

fn sturm_sequence(p: &UniPolynomial) -> Vec<UniPolynomial> {
    let mut seq = vec![p.clone(), p.derivative()];
    loop {
        let n = seq.len();
        if seq[n - 1].is_zero() {
            seq.pop();
            break;
        }
        let r = seq[n - 2].rem(&seq[n - 1]);
        if r.is_zero() {
            break;
        }
        seq.push(-&r);
    }
    seq
}

fn sign_changes(seq: &[UniPolynomial], at: &BigInt) -> usize {
    let t = BigRational::from_integer(at.clone());
    let mut changes = 0;
    let mut last = 0i8;
    for q in seq {
        let v = q.eval(&t);
        let s = if v.is_positive() {
            1
        } else if v.is_negative() {
            -1
        } else {
            0
        };
        if s != 0 {
            if last != 0 && s != last {
                changes += 1;
            }
            last = s;
        }
    }
    changes
}

/// Refines squarefree polynomials into a pairwise coprime family of monic
/// polynomials such that every input is a product of members.
pub fn coprime_basis(polys: &[UniPolynomial]) -> Vec<UniPolynomial> {
    let mut basis: Vec<UniPolynomial> = Vec::new();
    for p in polys {
        let mut rest = p.squarefree_part();
        let mut next = Vec::with_capacity(basis.len() + 1);
        for b in basis {
            if rest.is_constant() {
                next.push(b);
                continue;
            }
            let g = rest.gcd(&b);
            if g.is_constant() {
                next.push(b);
                continue;
            }
            let cofactor = b.exact_div(&g);
            if !cofactor.is_constant() {
                next.push(cofactor.monic());
            }
            rest = rest.exact_div(&g);
            next.push(g);
        }
        if !rest.is_constant() {
            next.push(rest.monic());
        }
        basis = next;
    }
    basis
}

/// True iff `gcd(g, g')` is constant, i.e. `g` has no repeated roots.
pub fn squarefree_check(g: &UniPolynomial) -> bool {
    g.gcd(&g.derivative()).is_constant()
}

impl Add for &UniPolynomial {
    type Output = UniPolynomial;
    fn add(self, rhs: &UniPolynomial) -> UniPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPolynomial::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &UniPolynomial {
    type Output = UniPolynomial;
    fn sub(self, rhs: &UniPolynomial) -> UniPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPolynomial::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Neg for &UniPolynomial {
    type Output = UniPolynomial;
    fn neg(self) -> UniPolynomial {
        UniPolynomial::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}

impl Mul for &UniPolynomial {
    type Output = UniPolynomial;
    fn mul(self, rhs: &UniPolynomial) -> UniPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return UniPolynomial::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPolynomial::new(out)
    }
}

impl fmt::Display for UniPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            let a = c.abs();
            match (i, a.is_one()) {
                (0, _) => write!(f, "{a}")?,
                (_, true) => {}
                _ => write!(f, "{a}*")?,
            }
            match i {
                0 => {}
                1 => f.write_str("t")?,
                _ => write!(f, "t^{i}")?,
            }
        }
        Ok(())
    }
}
