use super::GroupError;
use std::collections::{HashMap, VecDeque};
use std::hash::Hash;

/// Element id; id 0 is always the identity.
pub type Elem = usize;

/// A finite group given by its full multiplication table.
#[derive(Clone, Debug)]
pub struct FiniteGroup {
    name: String,
    n: usize,
    table: Vec<Elem>,
    inv: Vec<Elem>,
    labels: Vec<String>,
    /// Named generators used to parse words such as `r2s`.
    gen_names: Vec<(String, Elem)>,
}

impl PartialEq for FiniteGroup {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.table == other.table
    }
}

impl Eq for FiniteGroup {}

impl FiniteGroup {
    /// Validates the group axioms on a raw table.
    pub fn from_table(
        name: impl Into<String>,
        table: Vec<Vec<Elem>>,
        labels: Option<Vec<String>>,
    ) -> Result<Self, GroupError> {
        let n = table.len();
        if n == 0 {
            return Err(GroupError::InvalidTable("empty table".into()));
        }
        let mut flat = Vec::with_capacity(n * n);
        for (i, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(GroupError::InvalidTable(format!("row {i} has {} entries, expected {n}", row.len())));
            }
            for (j, &x) in row.iter().enumerate() {
                if x >= n {
                    return Err(GroupError::InvalidTable(format!("entry ({i},{j}) = {x} is not an element id")));
                }
            }
            flat.extend_from_slice(row);
        }
        for a in 0..n {
            if flat[a] != a || flat[a * n] != a {
                return Err(GroupError::Identity { a });
            }
        }
        for a in 0..n {
            for b in 0..n {
                let ab = flat[a * n + b];
                for c in 0..n {
                    if flat[ab * n + c] != flat[a * n + flat[b * n + c]] {
                        return Err(GroupError::Associativity { a, b, c });
                    }
                }
            }
        }
        let mut inv = vec![usize::MAX; n];
        for a in 0..n {
            match (0..n).find(|&b| flat[a * n + b] == 0 && flat[b * n + a] == 0) {
                Some(b) => inv[a] = b,
                None => return Err(GroupError::Inverse { a }),
            }
        }
        let labels = match labels {
            Some(l) if l.len() != n => {
                return Err(GroupError::InvalidTable(format!("{} labels for {n} elements", l.len())))
            }
            Some(l) => l,
            None => (0..n).map(|i| if i == 0 { "1".to_string() } else { format!("#{i}") }).collect(),
        };
        Ok(FiniteGroup { name: name.into(), n, table: flat, inv, labels, gen_names: Vec::new() })
    }

    /// Enumerates the group generated by `gens` under `mul` in breadth-first
    /// order, labelling every element by its first word in the generators.
    pub fn generate<T, F>(
        name: impl Into<String>,
        identity: T,
        gens: Vec<(String, T)>,
        mul: F,
        max_order: usize,
    ) -> Result<Self, GroupError>
    where
        T: Clone + Eq + Hash,
        F: Fn(&T, &T) -> T,
    {
        let name = name.into();
        let mut elems = vec![identity.clone()];
        let mut index: HashMap<T, Elem> = HashMap::from([(identity, 0)]);
        let mut words: Vec<Vec<(usize, u32)>> = vec![Vec::new()];
        let mut queue = VecDeque::from([0usize]);
        while let Some(x) = queue.pop_front() {
            for (gi, (_, g)) in gens.iter().enumerate() {
                let y = mul(&elems[x], g);
                if index.contains_key(&y) {
                    continue;
                }
                if elems.len() == max_order {
                    return Err(GroupError::BoundExceeded { name, max: max_order });
                }
                let mut w = words[x].clone();
                match w.last_mut() {
                    Some((last, e)) if *last == gi => *e += 1,
                    _ => w.push((gi, 1)),
                }
                index.insert(y.clone(), elems.len());
                queue.push_back(elems.len());
                elems.push(y);
                words.push(w);
            }
        }
        let n = elems.len();
        let mut table = vec![vec![0; n]; n];
        for (a, x) in elems.iter().enumerate() {
            for (b, y) in elems.iter().enumerate() {
                table[a][b] = index[&mul(x, y)];
            }
        }
        let labels = words
            .iter()
            .map(|w| {
                if w.is_empty() {
                    return "1".to_string();
                }
                w.iter()
                    .map(|&(g, e)| if e == 1 { gens[g].0.clone() } else { format!("{}{e}", gens[g].0) })
                    .collect()
            })
            .collect();
        let mut g = Self::from_table(name, table, Some(labels))?;
        g.gen_names = gens.iter().map(|(s, t)| (s.clone(), index[t])).collect();
        Ok(g)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn elements(&self) -> std::ops::Range<Elem> {
        0..self.n
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.table[a * self.n + b]
    }

    #[inline]
    pub fn inv(&self, a: Elem) -> Elem {
        self.inv[a]
    }

    /// `a^k` for any integer `k`.
    pub fn pow(&self, a: Elem, k: i64) -> Elem {
        let base = if k < 0 { self.inv(a) } else { a };
        let mut e = k.unsigned_abs();
        let (mut acc, mut sq) = (0, base);
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, sq);
            }
            sq = self.mul(sq, sq);
            e >>= 1;
        }
        acc
    }

    /// `[a, b] = a b a^-1 b^-1`.
    pub fn comm(&self, a: Elem, b: Elem) -> Elem {
        self.mul(self.mul(a, b), self.mul(self.inv(a), self.inv(b)))
    }

    /// `g a g^-1`.
    pub fn conj(&self, g: Elem, a: Elem) -> Elem {
        self.mul(self.mul(g, a), self.inv(g))
    }

    pub fn elem_order(&self, a: Elem) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn exponent(&self) -> usize {
        self.elements().map(|a| self.elem_order(a)).fold(1, num_integer::lcm)
    }

    pub fn is_abelian(&self) -> bool {
        self.elements().all(|a| self.elements().all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn label(&self, a: Elem) -> &str {
        &self.labels[a]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub(crate) fn set_generator_names(&mut self, gens: Vec<(String, Elem)>) {
        self.gen_names = gens;
    }

    pub fn generator_names(&self) -> &[(String, Elem)] {
        &self.gen_names
    }

    /// Element named by a label, a `#id`, or a word in the named generators
    /// such as `r2s` (letters optionally followed by an exponent).
    pub fn parse_element(&self, s: &str) -> Result<Elem, GroupError> {
        let s = s.trim();
        if let Some(i) = self.labels.iter().position(|l| l == s) {
            return Ok(i);
        }
        if let Some(id) = s.strip_prefix('#') {
            return match id.parse::<usize>() {
                Ok(i) if i < self.n => Ok(i),
                _ => Err(GroupError::UnknownElement(s.to_string())),
            };
        }
        let chars: Vec<char> = s.chars().collect();
        let mut acc = 0;
        let mut i = 0;
        while i < chars.len() {
            let c = chars[i];
            let g = self
                .gen_names
                .iter()
                .find(|(name, _)| name.len() == c.len_utf8() && name.starts_with(c))
                .ok_or_else(|| GroupError::UnknownElement(s.to_string()))?
                .1;
            i += 1;
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_digit() || (i == start && chars[i] == '-')) {
                i += 1;
            }
            let e: i64 = if start == i {
                1
            } else {
                chars[start..i].iter().collect::<String>().parse().map_err(|_| GroupError::UnknownElement(s.to_string()))?
            };
            acc = self.mul(acc, self.pow(g, e));
        }
        Ok(acc)
    }

    /// Rows of the multiplication table.
    pub fn table_rows(&self) -> Vec<Vec<Elem>> {
        (0..self.n).map(|a| self.table[a * self.n..(a + 1) * self.n].to_vec()).collect()
    }

    /// Direct product, enumerated from the generators of both factors
    /// (second-factor names are renamed on clashes).
    pub fn direct_product(&self, other: &FiniteGroup, max_order: usize) -> Result<FiniteGroup, GroupError> {
        if self.n * other.n > max_order {
            return Err(GroupError::BoundExceeded { name: format!("{}x{}", self.name, other.name), max: max_order });
        }
        let mut used: Vec<String> = Vec::new();
        let mut gens = Vec::new();
        let fresh = |used: &Vec<String>, want: &str| -> String {
            if !used.iter().any(|u| u == want) {
                return want.to_string();
            }
            ('a'..='z').map(|c| c.to_string()).find(|c| !used.contains(c)).expect("at most 26 generators")
        };
        let (g1, g2) = (self.gens_or_all(), other.gens_or_all());
        for (s, e) in g1 {
            let s = fresh(&used, &s);
            used.push(s.clone());
            gens.push((s, (e, 0)));
        }
        for (s, e) in g2 {
            let s = fresh(&used, &s);
            used.push(s.clone());
            gens.push((s, (0, e)));
        }
        FiniteGroup::generate(
            format!("{}x{}", self.name, other.name),
            (0usize, 0usize),
            gens,
            |a, b| (self.mul(a.0, b.0), other.mul(a.1, b.1)),
            max_order,
        )
    }

    fn gens_or_all(&self) -> Vec<(String, Elem)> {
        if !self.gen_names.is_empty() {
            return self.gen_names.clone();
        }
        let letters = ('a'..='z').map(|c| c.to_string());
        letters.zip(1..self.n).collect()
    }
}
