use std::cmp::Ordering;
use std::fmt;

/// One of the three homogeneous coordinates of the projective plane.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    X,
    Y,
    Z,
}

impl Var {
    pub const ALL: [Var; 3] = [Var::X, Var::Y, Var::Z];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> char {
        match self {
            Var::X => 'x',
            Var::Y => 'y',
            Var::Z => 'z',
        }
    }

    pub fn from_char(c: char) -> Option<Var> {
        match c {
            'x' => Some(Var::X),
            'y' => Some(Var::Y),
            'z' => Some(Var::Z),
            _ => None,
        }
    }
}

/// A monomial `x^a y^b z^c`.
///
/// Ordering is graded-lexicographic with `x > y > z`: first by total degree,
/// then lexicographically on the exponent vector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    exps: [u32; 3],
}

impl Monomial {
    pub const ONE: Monomial = Monomial { exps: [0, 0, 0] };

    pub const fn new(x: u32, y: u32, z: u32) -> Self {
        Monomial { exps: [x, y, z] }
    }

    pub fn var(v: Var) -> Self {
        let mut exps = [0; 3];
        exps[v.index()] = 1;
        Monomial { exps }
    }

    pub fn exponents(&self) -> [u32; 3] {
        self.exps
    }

    pub fn exponent(&self, v: Var) -> u32 {
        self.exps[v.index()]
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: [
                self.exps[0] + other.exps[0],
                self.exps[1] + other.exps[1],
                self.exps[2] + other.exps[2],
            ],
        }
    }

    /// Lowers the exponent of `v` by one, returning the old exponent.
    pub(crate) fn lower(&self, v: Var) -> Option<(u32, Monomial)> {
        let e = self.exps[v.index()];
        if e == 0 {
            return None;
        }
        let mut exps = self.exps;
        exps[v.index()] -= 1;
        Some((e, Monomial { exps }))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.exps.cmp(&other.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.degree() == 0 {
            return f.write_str("1");
        }
        let mut first = true;
        for v in Var::ALL {
            let e = self.exponent(v);
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            write!(f, "{}", v.name())?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// All monomials of total degree `d`, in descending graded-lex order
/// (`x^d` first, `z^d` last).
pub fn monomial_basis(d: u32) -> Vec<Monomial> {
    let mut out = Vec::with_capacity(((d + 1) * (d + 2) / 2) as usize);
    for a in (0..=d).rev() {
        for b in (0..=d - a).rev() {
            out.push(Monomial::new(a, b, d - a - b));
        }
    }
    out
}

/// Position of a degree-`d` monomial inside [`monomial_basis`]`(d)`.
pub(crate) fn basis_index(m: &Monomial) -> usize {
    let [a, b, _] = m.exps;
    let d = m.degree();
    // monomials with x-exponent > a come first: sum_{a' = a+1}^{d} (d - a' + 1)
    let k = d - a;
    let before = (k * (k + 1) / 2) as usize;
    before + (d - a - b) as usize
}
