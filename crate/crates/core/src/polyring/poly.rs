use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::monomial::{Monomial, Var};

/// Sparse polynomial in `x, y, z` with rational coefficients.
///
/// Terms with a zero coefficient are never stored, so structural equality is
/// polynomial equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, BigRational>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::term(c, Monomial::ONE)
    }

    pub fn from_int(c: i64) -> Self {
        Self::constant(BigRational::from_integer(c.into()))
    }

    pub fn var(v: Var) -> Self {
        Self::term(BigRational::one(), Monomial::var(v))
    }

    pub fn term(c: BigRational, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial { terms }
    }

    /// Builds a polynomial from (coefficient, monomial) pairs, merging repeats.
    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (BigRational, Monomial)>,
    {
        let mut p = Polynomial::zero();
        for (c, m) in terms {
            p.add_term(m, c);
        }
        p
    }

    fn add_term(&mut self, m: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> BigRational {
        self.terms.get(m).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn degree_in(&self, v: Var) -> Option<u32> {
        self.terms.keys().map(|m| m.exponent(v)).max()
    }

    /// Lowest total degree of a term; `None` for the zero polynomial.
    pub fn min_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).min()
    }

    pub fn is_homogeneous_of(&self, d: u32) -> bool {
        self.terms.keys().all(|m| m.degree() == d)
    }

    /// The common degree of all terms, if there is one.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let d = self.degree()?;
        self.is_homogeneous_of(d).then_some(d)
    }

    /// Sum of the terms of total degree exactly `d`.
    pub fn homogeneous_part(&self, d: u32) -> Polynomial {
        Polynomial {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == d)
                .map(|(m, c)| (*m, c.clone()))
                .collect(),
        }
    }

    pub fn scalar_mul(&self, c: &BigRational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self.terms.iter().map(|(m, a)| (*m, a * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, mono: &Monomial) -> Polynomial {
        Polynomial {
            terms: self.terms.iter().map(|(m, a)| (m.mul(mono), a.clone())).collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Polynomial {
        let mut base = self.clone();
        let mut acc = Polynomial::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Formal partial derivative with respect to `v`.
    pub fn partial(&self, v: Var) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            if let Some((e, lowered)) = m.lower(v) {
                out.add_term(lowered, c * BigRational::from_integer(e.into()));
            }
        }
        out
    }

    pub fn eval(&self, point: &[BigRational; 3]) -> BigRational {
        let mut acc = BigRational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for v in Var::ALL {
                let e = m.exponent(v);
                if e > 0 {
                    t *= num_traits::pow(point[v.index()].clone(), e as usize);
                }
            }
            acc += t;
        }
        acc
    }

    /// Substitutes each variable by a polynomial: `v -> images[v]`.
    pub fn substitute(&self, images: &[Polynomial; 3]) -> Polynomial {
        // cache powers per variable
        let mut powers: [Vec<Polynomial>; 3] = Default::default();
        for v in Var::ALL {
            let max = self.degree_in(v).unwrap_or(0) as usize;
            let pw = &mut powers[v.index()];
            pw.push(Polynomial::one());
            for i in 1..=max {
                let next = &pw[i - 1] * &images[v.index()];
                pw.push(next);
            }
        }
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            let [a, b, z] = m.exponents();
            let t = &(&powers[0][a as usize] * &powers[1][b as usize]) * &powers[2][z as usize];
            out = &out + &t.scalar_mul(c);
        }
        out
    }

    /// Applies the linear coordinate change `(x, y, z) -> (x + s1 z, y + s2 z, z)`.
    pub fn shear(&self, s: &[BigRational; 2]) -> Polynomial {
        let z = Polynomial::var(Var::Z);
        let images = [
            &Polynomial::var(Var::X) + &z.scalar_mul(&s[0]),
            &Polynomial::var(Var::Y) + &z.scalar_mul(&s[1]),
            z.clone(),
        ];
        self.substitute(&images)
    }

    /// Applies the linear change of coordinates `v -> M v`, i.e. returns
    /// `f(M (x, y, z)^T)`.
    pub fn linear_change(&self, m: &[[BigRational; 3]; 3]) -> Polynomial {
        let vars = [Polynomial::var(Var::X), Polynomial::var(Var::Y), Polynomial::var(Var::Z)];
        let images = std::array::from_fn(|i| {
            let mut acc = Polynomial::zero();
            for (j, v) in vars.iter().enumerate() {
                acc = &acc + &v.scalar_mul(&m[i][j]);
            }
            acc
        });
        self.substitute(&images)
    }

    /// Lowest common multiple of coefficient denominators.
    pub fn denominator_lcm(&self) -> BigInt {
        self.terms
            .values()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()))
    }

    /// The scalar multiple with coprime integer coefficients and positive
    /// leading coefficient (leading in graded-lex order).
    pub fn primitive(&self) -> Polynomial {
        let Some((_, lead)) = self.terms.iter().next_back() else {
            return Polynomial::zero();
        };
        let l = self.denominator_lcm();
        let g = self
            .terms
            .values()
            .fold(BigInt::zero(), |acc, c| acc.gcd(&(c.numer() * (&l / c.denom()))));
        let mut scale = BigRational::new(l, g);
        if lead.is_negative() {
            scale = -scale;
        }
        self.scalar_mul(&scale)
    }

    /// True when `other = c * self` for some nonzero rational `c`.
    pub fn is_proportional_to(&self, other: &Polynomial) -> bool {
        if self.is_zero() || other.is_zero() {
            return self.is_zero() && other.is_zero();
        }
        self.primitive() == other.primitive()
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, -c.clone());
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            terms: self.terms.iter().map(|(m, c)| (*m, -c.clone())).collect(),
        }
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $f:ident),*) => {$(
        impl $tr for Polynomial {
            type Output = Polynomial;
            fn $f(self, rhs: Polynomial) -> Polynomial {
                (&self).$f(&rhs)
            }
        }
    )*};
}
forward_owned!(Add::add, Sub::sub, Mul::mul);

impl fmt::Display for Polynomial {
    /// Canonical form: descending graded-lex, each coefficient printed as an
    /// integer or `p/q`, explicit `*` between factors.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let a = c.abs();
            let constant = m.degree() == 0;
            if a.is_one() {
                if constant {
                    f.write_str("1")?;
                } else {
                    write!(f, "{m}")?;
                }
            } else {
                if a.is_integer() {
                    write!(f, "{}", a.numer())?;
                } else {
                    write!(f, "{}/{}", a.numer(), a.denom())?;
                }
                if !constant {
                    write!(f, "*{m}")?;
                }
            }
        }
        Ok(())
    }
}
