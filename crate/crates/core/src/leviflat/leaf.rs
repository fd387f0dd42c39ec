use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::io::parse_with_parameter;
use crate::poly::{MixedPoly, Substitution};

/// A one-parameter family of complex hypersurfaces given by eliminating some
/// variables: `z_i = f_i(z, t)` with `t` real.
///
/// Images live in `num_vars + 1` variables, the last one being `t`. Because
/// `t` is real, any `t̄` in an image is read as `t`.
#[derive(Clone, Debug, PartialEq)]
pub struct LeafFamily {
    num_vars: usize,
    images: BTreeMap<usize, MixedPoly>,
}

impl LeafFamily {
    pub fn new(num_vars: usize) -> Self {
        LeafFamily {
            num_vars,
            images: BTreeMap::new(),
        }
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    /// Index of `t` in the image ring.
    pub fn parameter_index(&self) -> usize {
        self.num_vars
    }

    pub fn images(&self) -> &BTreeMap<usize, MixedPoly> {
        &self.images
    }

    fn fold_parameter(&self, p: &MixedPoly) -> MixedPoly {
        let t = self.num_vars;
        p.map_monomials(|a, b| {
            let (mut a, mut b) = (a.to_vec(), b.to_vec());
            a[t] += b[t];
            b[t] = 0;
            (a, b)
        })
    }

    /// Sets `z_var ↦ image` (0-based `var`).
    pub fn assign(&mut self, var: usize, image: MixedPoly) -> Result<&mut Self> {
        if var >= self.num_vars {
            return Err(Error::IndexOutOfRange {
                index: var + 1,
                num_vars: self.num_vars,
            });
        }
        if image.num_vars() != self.num_vars + 1 {
            return Err(Error::MalformedFamily(format!(
                "image of z{} must use {} variables plus t",
                var + 1,
                self.num_vars
            )));
        }
        let image = self.fold_parameter(&image);
        if !image.is_holomorphic() {
            return Err(Error::MalformedFamily(format!(
                "image of z{} depends on conjugated variables",
                var + 1
            )));
        }
        if self.images.insert(var, image).is_some() {
            return Err(Error::MalformedFamily(format!("z{} assigned twice", var + 1)));
        }
        Ok(self)
    }

    /// Parses `"z1 = -(t*z2 + t^2*z3); z4 = t"`.
    pub fn parse(text: &str, num_vars: usize) -> Result<Self> {
        let mut family = LeafFamily::new(num_vars);
        for part in text.split(';').map(str::trim).filter(|s| !s.is_empty()) {
            let (lhs, rhs) = part
                .split_once('=')
                .ok_or_else(|| Error::MalformedFamily(format!("expected `zN = expr`, got `{part}`")))?;
            let var = lhs
                .trim()
                .strip_prefix('z')
                .and_then(|n| n.parse::<usize>().ok())
                .filter(|&n| n >= 1)
                .ok_or_else(|| Error::MalformedFamily(format!("`{}` is not a variable", lhs.trim())))?;
            let image = parse_with_parameter(rhs, num_vars, "t")?;
            family.assign(var - 1, image)?;
        }
        if family.images.is_empty() {
            return Err(Error::MalformedFamily("empty family".into()));
        }
        Ok(family)
    }

    /// Substitutes the family into `p`, giving a polynomial in `z` and `t`.
    pub fn apply(&self, p: &MixedPoly) -> Result<MixedPoly> {
        if p.num_vars() != self.num_vars {
            return Err(Error::VarCountMismatch {
                left: self.num_vars,
                right: p.num_vars(),
            });
        }
        let target = self.num_vars + 1;
        let mut sub = Substitution::new(target);
        for i in 0..self.num_vars {
            let (image, conj_image) = match self.images.get(&i) {
                Some(f) => (f.clone(), self.fold_parameter(&f.conjugate())),
                None => (MixedPoly::var(target, i)?, MixedPoly::conj_var(target, i)?),
            };
            sub.set(i, image, conj_image)?;
        }
        p.substitute(&sub)
    }
}

/// True iff `p` vanishes identically on every member of the family, with
/// `t` a formal real parameter.
pub fn check_leaf_family(p: &MixedPoly, family: &LeafFamily) -> Result<bool> {
    Ok(family.apply(p)?.is_zero())
}
