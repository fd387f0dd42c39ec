use std::collections::{BTreeMap, HashMap};

use super::{MixedPoly, Wirtinger};
use crate::error::{Error, Result};

/// Images for the `z` and `z̄` slots of a polynomial.
///
/// The conjugate images are given separately rather than derived, so a real
/// parameter `t` can be modelled by one holomorphic target variable used on
/// both sides.
#[derive(Clone, Debug)]
pub struct Substitution {
    target_vars: usize,
    holo: BTreeMap<usize, MixedPoly>,
    antiholo: BTreeMap<usize, MixedPoly>,
}

impl Substitution {
    pub fn new(target_vars: usize) -> Self {
        Substitution {
            target_vars,
            holo: BTreeMap::new(),
            antiholo: BTreeMap::new(),
        }
    }

    /// The substitution `z ↦ z, z̄ ↦ z̄` on `num_vars` variables.
    pub fn identity(num_vars: usize) -> Self {
        let mut s = Substitution::new(num_vars);
        for i in 0..num_vars {
            s.holo.insert(i, MixedPoly::var(num_vars, i).unwrap());
            s.antiholo.insert(i, MixedPoly::conj_var(num_vars, i).unwrap());
        }
        s
    }

    pub fn target_vars(&self) -> usize {
        self.target_vars
    }

    /// Sets the images of `z_var` and `z̄_var`.
    pub fn set(&mut self, var: usize, image: MixedPoly, conj_image: MixedPoly) -> Result<&mut Self> {
        self.set_side(var, Wirtinger::Holo, image)?;
        self.set_side(var, Wirtinger::Antiholo, conj_image)?;
        Ok(self)
    }

    /// Sets `z_var ↦ image` and `z̄_var ↦ conjugate(image)`.
    pub fn set_conjugate_pair(&mut self, var: usize, image: MixedPoly) -> Result<&mut Self> {
        let c = image.conjugate();
        self.set(var, image, c)
    }

    pub fn set_side(&mut self, var: usize, side: Wirtinger, image: MixedPoly) -> Result<&mut Self> {
        if image.num_vars() != self.target_vars {
            return Err(Error::VarCountMismatch {
                left: self.target_vars,
                right: image.num_vars(),
            });
        }
        match side {
            Wirtinger::Holo => self.holo.insert(var, image),
            Wirtinger::Antiholo => self.antiholo.insert(var, image),
        };
        Ok(self)
    }
}

impl MixedPoly {
    /// Composes with the images in `sub`. Every variable occurring in `self`
    /// (on either side) needs an image.
    pub fn substitute(&self, sub: &Substitution) -> Result<MixedPoly> {
        let k = self.num_vars;
        let mut cache: HashMap<(bool, usize, u32), MixedPoly> = HashMap::new();
        let mut acc = MixedPoly::zero(sub.target_vars);
        for t in self.terms() {
            let mut prod = MixedPoly::constant(sub.target_vars, t.coeff.clone());
            for (conj, exps) in [(false, t.alpha), (true, t.beta)] {
                for (i, &e) in exps.iter().enumerate().take(k) {
                    if e == 0 {
                        continue;
                    }
                    let key = (conj, i, e);
                    if !cache.contains_key(&key) {
                        let table = if conj { &sub.antiholo } else { &sub.holo };
                        let base = table.get(&i).ok_or(Error::MissingAssignment(i + 1))?;
                        cache.insert(key, base.pow(e));
                    }
                    prod = &prod * &cache[&key];
                }
            }
            acc = &acc + &prod;
        }
        Ok(acc)
    }
}
