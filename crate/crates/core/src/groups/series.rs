use super::group::FiniteGroup;
use super::subgroup::Subgroup;
use super::GroupError;

#[derive(Clone, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SeriesKind {
    LowerCentral,
    Intersected,
    Action,
    Custom,
}

/// Descending chain `S_1 ⊇ S_2 ⊇ ...` stored until it is constant;
/// `term(i)` for larger `i` returns the last stored term.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupSeries {
    terms: Vec<Subgroup>,
    kind: SeriesKind,
}

impl GroupSeries {
    /// Chain from explicit terms with a constant tail dropped; the
    /// descending condition and the N-series law are checked.
    pub fn new(g: &FiniteGroup, mut terms: Vec<Subgroup>, kind: SeriesKind) -> Result<Self, GroupError> {
        if terms.is_empty() {
            return Err(GroupError::InvalidSeries("empty series".into()));
        }
        while terms.len() > 1 && terms[terms.len() - 1] == terms[terms.len() - 2] {
            terms.pop();
        }
        for k in 1..terms.len() {
            if !terms[k].is_subset_of(&terms[k - 1]) {
                return Err(GroupError::InvalidSeries(format!("term {} is not contained in term {k}", k + 1)));
            }
        }
        let s = GroupSeries { terms, kind };
        s.check_n_series(g)?;
        Ok(s)
    }

    /// 1-based term.
    pub fn term(&self, i: usize) -> &Subgroup {
        assert!(i >= 1, "series terms are 1-based");
        &self.terms[(i - 1).min(self.terms.len() - 1)]
    }

    pub fn top(&self) -> &Subgroup {
        &self.terms[0]
    }

    pub fn stored(&self) -> &[Subgroup] {
        &self.terms
    }

    pub fn kind(&self) -> &SeriesKind {
        &self.kind
    }

    /// Index of the last stored term; every later term equals it.
    pub fn length(&self) -> usize {
        self.terms.len()
    }

    pub fn terminates_at_one(&self) -> bool {
        self.terms.last().is_some_and(Subgroup::is_trivial)
    }

    /// Largest `w` with `a ∈ S_w`, capped at `cap`.
    pub fn weight(&self, a: usize, cap: usize) -> usize {
        let mut w = 1;
        while w < cap && self.term(w + 1).contains(a) {
            w += 1;
        }
        w
    }

    /// `[S_i, S_j] ⊆ S_{i+j}` for all stored indices (indices beyond are equal).
    pub fn check_n_series(&self, g: &FiniteGroup) -> Result<(), GroupError> {
        let m = self.terms.len();
        for i in 1..=m {
            for j in i..=m {
                let target = self.term(i + j);
                let a = self.term(i);
                let b = self.term(j);
                for &x in a.elements() {
                    for &y in b.elements() {
                        if !target.contains(g.comm(x, y)) {
                            return Err(GroupError::InvalidSeries(format!(
                                "[S_{i}, S_{j}] is not contained in S_{}",
                                i + j
                            )));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    pub fn describe(&self, g: &FiniteGroup) -> Vec<String> {
        self.terms.iter().map(|s| g.describe_subgroup(s)).collect()
    }

    pub fn orders(&self) -> Vec<usize> {
        self.terms.iter().map(Subgroup::order).collect()
    }
}

impl FiniteGroup {
    /// Lower central series of the subgroup `top`: `S_{i+1} = [S_i, top]`.
    pub fn lower_central_series_of(&self, top: &Subgroup) -> GroupSeries {
        self.descend(top.clone(), top, SeriesKind::LowerCentral)
    }

    pub fn lower_central_series(&self) -> GroupSeries {
        self.lower_central_series_of(&self.whole())
    }

    /// `S_1 = k`, `S_{i+1} = [S_i, ambient]` for `k` normal in `ambient`.
    pub fn action_series(&self, k: &Subgroup, ambient: &Subgroup) -> Result<GroupSeries, GroupError> {
        if !k.is_subset_of(ambient) || !self.normalizes(ambient, k) {
            return Err(GroupError::NotNormal);
        }
        Ok(self.descend(k.clone(), ambient, SeriesKind::Action))
    }

    fn descend(&self, first: Subgroup, with: &Subgroup, kind: SeriesKind) -> GroupSeries {
        let mut terms = vec![first];
        loop {
            let next = self.commutator_subgroup(terms.last().expect("nonempty"), with);
            if &next == terms.last().expect("nonempty") {
                break;
            }
            terms.push(next);
        }
        GroupSeries { terms, kind }
    }

    /// `H_{(n)} = H ∩ S_n`.
    pub fn induced_series(&self, series: &GroupSeries, h: &Subgroup) -> GroupSeries {
        let mut terms: Vec<Subgroup> = (1..=series.length()).map(|i| self.intersect(h, series.term(i))).collect();
        while terms.len() > 1 && terms[terms.len() - 1] == terms[terms.len() - 2] {
            terms.pop();
        }
        GroupSeries { terms, kind: SeriesKind::Intersected }
    }

    /// Custom series from explicit subgroups, first term the top.
    pub fn custom_series(&self, terms: Vec<Subgroup>) -> Result<GroupSeries, GroupError> {
        GroupSeries::new(self, terms, SeriesKind::Custom)
    }
}

impl FiniteGroup {
    /// A series of subgroups of `k` transported to `k` as a group in its own
    /// right; element i of the result is the i-th element of `k`.
    pub fn transport_series(&self, k: &Subgroup, series: &GroupSeries) -> Result<(FiniteGroup, GroupSeries), GroupError> {
        if series.top() != k {
            return Err(GroupError::InvalidSeries("the series must start at the subgroup".into()));
        }
        let (kg, emb) = self.subgroup_group(k)?;
        let terms = series.stored().iter().map(|t| kg.pull_back_subgroup(&emb, t)).collect::<Result<Vec<_>, _>>()?;
        let s = GroupSeries::new(&kg, terms, series.kind().clone())?;
        Ok((kg, s))
    }
}
