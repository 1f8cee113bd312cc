use super::group::{Elem, FiniteGroup};
use super::GroupError;

/// A subgroup as a sorted element set with a membership mask.
/// Equality compares element sets only.
#[derive(Clone, Debug)]
pub struct Subgroup {
    elems: Vec<Elem>,
    mask: Vec<bool>,
    gens: Vec<Elem>,
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.elems == other.elems
    }
}

impl Eq for Subgroup {}

impl std::hash::Hash for Subgroup {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.elems.hash(state);
    }
}

impl Subgroup {
    pub fn elements(&self) -> &[Elem] {
        &self.elems
    }

    pub fn generators(&self) -> &[Elem] {
        &self.gens
    }

    pub fn order(&self) -> usize {
        self.elems.len()
    }

    #[inline]
    pub fn contains(&self, a: Elem) -> bool {
        self.mask[a]
    }

    pub fn is_trivial(&self) -> bool {
        self.elems.len() == 1
    }

    pub fn is_subset_of(&self, other: &Subgroup) -> bool {
        self.elems.iter().all(|&a| other.contains(a))
    }

    pub fn mask(&self) -> &[bool] {
        &self.mask
    }

    /// Index in a larger subgroup.
    pub fn index_in(&self, big: &Subgroup) -> usize {
        big.order() / self.order()
    }
}

impl FiniteGroup {
    /// Smallest subgroup containing `gens`; the set is closed by multiplying
    /// with generators until stable.
    pub fn closure(&self, gens: &[Elem]) -> Subgroup {
        let n = self.order();
        let mut mask = vec![false; n];
        mask[0] = true;
        let mut elems = vec![0];
        let gens: Vec<Elem> = {
            let mut g: Vec<Elem> = gens.iter().copied().filter(|&x| x != 0).collect();
            g.dedup();
            g
        };
        let mut i = 0;
        while i < elems.len() {
            let x = elems[i];
            for &g in &gens {
                let y = self.mul(x, g);
                if !mask[y] {
                    mask[y] = true;
                    elems.push(y);
                }
            }
            i += 1;
        }
        elems.sort_unstable();
        Subgroup { elems, mask, gens }
    }

    /// Subgroup from an explicit element set, verified to be closed.
    pub fn subgroup_from_set(&self, set: &[Elem]) -> Result<Subgroup, GroupError> {
        let s = self.closure(set);
        if s.order() != {
            let mut v = set.to_vec();
            v.push(0);
            v.sort_unstable();
            v.dedup();
            v.len()
        } {
            return Err(GroupError::NotSubgroup);
        }
        Ok(s)
    }

    pub fn whole(&self) -> Subgroup {
        let gens: Vec<Elem> = if self.generator_names().is_empty() {
            self.elements().collect()
        } else {
            self.generator_names().iter().map(|g| g.1).collect()
        };
        self.closure(&gens)
    }

    pub fn trivial_subgroup(&self) -> Subgroup {
        self.closure(&[])
    }

    /// `[A, B]`, generated by all `[a, b]`.
    pub fn commutator_subgroup(&self, a: &Subgroup, b: &Subgroup) -> Subgroup {
        let mut seen = vec![false; self.order()];
        let mut gens = Vec::new();
        for &x in a.elements() {
            for &y in b.elements() {
                let c = self.comm(x, y);
                if !seen[c] {
                    seen[c] = true;
                    gens.push(c);
                }
            }
        }
        self.closure(&gens)
    }

    /// The set `A B = {ab}`, sorted.
    pub fn product_set(&self, a: &Subgroup, b: &Subgroup) -> Vec<Elem> {
        let mut seen = vec![false; self.order()];
        for &x in a.elements() {
            for &y in b.elements() {
                seen[self.mul(x, y)] = true;
            }
        }
        (0..self.order()).filter(|&i| seen[i]).collect()
    }

    /// Product of two subgroups when it is a subgroup (e.g. one normalises the other).
    pub fn join(&self, a: &Subgroup, b: &Subgroup) -> Subgroup {
        let gens: Vec<Elem> = a.generators().iter().chain(b.generators()).copied().collect();
        self.closure(&gens)
    }

    pub fn intersect(&self, a: &Subgroup, b: &Subgroup) -> Subgroup {
        let set: Vec<Elem> = a.elements().iter().copied().filter(|&x| b.contains(x)).collect();
        self.closure(&set)
    }

    /// Smallest subgroup containing `gens` and normalised by `ambient`.
    pub fn normal_closure_in(&self, gens: &[Elem], ambient: &Subgroup) -> Subgroup {
        let mut s = self.closure(gens);
        loop {
            let mut extra = Vec::new();
            for &g in ambient.elements() {
                for &x in s.generators() {
                    let c = self.conj(g, x);
                    if !s.contains(c) {
                        extra.push(c);
                    }
                }
            }
            if extra.is_empty() {
                return s;
            }
            let gens: Vec<Elem> = s.generators().iter().copied().chain(extra).collect();
            s = self.closure(&gens);
        }
    }

    pub fn normal_closure(&self, gens: &[Elem]) -> Subgroup {
        self.normal_closure_in(gens, &self.whole())
    }

    /// True when `ambient` normalises `s`.
    pub fn normalizes(&self, ambient: &Subgroup, s: &Subgroup) -> bool {
        ambient.elements().iter().all(|&g| s.generators().iter().all(|&x| s.contains(self.conj(g, x))))
    }

    pub fn is_normal(&self, s: &Subgroup) -> bool {
        self.normalizes(&self.whole(), s)
    }

    pub fn center(&self) -> Subgroup {
        let z: Vec<Elem> = self.elements().filter(|&a| self.elements().all(|b| self.mul(a, b) == self.mul(b, a))).collect();
        self.closure(&z)
    }

    /// `A^k`, the subgroup generated by k-th powers of elements of `a`.
    pub fn power_subgroup(&self, a: &Subgroup, k: i64) -> Subgroup {
        let gens: Vec<Elem> = a.elements().iter().map(|&x| self.pow(x, k)).collect();
        self.closure(&gens)
    }

    /// Parses a comma-separated list of element words into a generated subgroup.
    pub fn parse_subgroup(&self, spec: &str) -> Result<Subgroup, GroupError> {
        let spec = spec.trim();
        if spec.is_empty() || spec == "1" {
            return Ok(self.trivial_subgroup());
        }
        if spec == "G" {
            return Ok(self.whole());
        }
        let gens = spec.split(',').map(|w| self.parse_element(w)).collect::<Result<Vec<_>, _>>()?;
        Ok(self.closure(&gens))
    }

    /// Short description listing the generators by label.
    pub fn describe_subgroup(&self, s: &Subgroup) -> String {
        if s.is_trivial() {
            return "1".into();
        }
        format!("<{}>", s.generators().iter().map(|&g| self.label(g)).collect::<Vec<_>>().join(","))
    }
}
