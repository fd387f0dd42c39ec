use std::cmp::Ordering;

/// An exponent vector ordered graded-lexicographically.
///
/// The total degree is compared first, then exponents lexicographically from
/// the first slot, a larger exponent meaning a larger monomial. For mixed
/// polynomials the vector is `[α, β]`, so `z`-exponents are compared before
/// `z̄`-exponents; for complexified polynomials it is `[z, w]`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial {
    degree: u32,
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        let degree = exps.iter().sum();
        Monomial { degree, exps }
    }

    pub fn one(len: usize) -> Self {
        Monomial {
            degree: 0,
            exps: vec![0; len],
        }
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        Monomial {
            degree: self.degree + other.degree,
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()?;
        Some(Monomial {
            degree: self.degree - other.degree,
            exps,
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree
            .cmp(&other.degree)
            .then_with(|| self.exps.cmp(&other.exps))
    }
}

/// All exponent vectors of `num_vars` variables with total degree `d`,
/// in decreasing graded-lex order (`z1^d` first).
pub fn degree_basis(num_vars: usize, d: u32) -> Vec<Vec<u32>> {
    fn rec(prefix: &mut Vec<u32>, left: u32, slots: usize, out: &mut Vec<Vec<u32>>) {
        if slots == 1 {
            prefix.push(left);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for e in (0..=left).rev() {
            prefix.push(e);
            rec(prefix, left - e, slots - 1, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if num_vars == 0 {
        if d == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    rec(&mut Vec::with_capacity(num_vars), d, num_vars, &mut out);
    out
}
