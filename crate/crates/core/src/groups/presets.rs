use super::group::FiniteGroup;
use super::GroupError;

pub const DEFAULT_MAX_ORDER: usize = 512;

fn gen<T>(name: &str, t: T) -> (String, T) {
    (name.to_string(), t)
}

pub fn cyclic(n: usize, max_order: usize) -> Result<FiniteGroup, GroupError> {
    if n == 0 {
        return Err(GroupError::InvalidParams("cyclic order must be positive".into()));
    }
    if n > max_order {
        return Err(GroupError::BoundExceeded { name: format!("C{n}"), max: max_order });
    }
    FiniteGroup::generate(format!("C{n}"), 0usize, vec![gen("a", 1 % n)], |x, y| (x + y) % n, max_order)
}

/// Symmetries of the regular n-gon, order 2n: `r` the rotation, `s` a reflection.
pub fn dihedral(n: usize, max_order: usize) -> Result<FiniteGroup, GroupError> {
    if n < 2 {
        return Err(GroupError::InvalidParams("dihedral needs n >= 2".into()));
    }
    if 2 * n > max_order {
        return Err(GroupError::BoundExceeded { name: format!("D{n}"), max: max_order });
    }
    // (i, f) = r^i s^f, s r = r^-1 s
    let mul = move |a: &(usize, u8), b: &(usize, u8)| {
        let j = if a.1 == 0 { b.0 } else { (n - b.0) % n };
        ((a.0 + j) % n, a.1 ^ b.1)
    };
    FiniteGroup::generate(format!("D{n}"), (0, 0), vec![gen("r", (1, 0)), gen("s", (0, 1))], mul, max_order)
}

/// Quaternion group `<i, j | i^4, i^2 = j^2, j i j^-1 = i^-1>`.
pub fn quaternion8(max_order: usize) -> Result<FiniteGroup, GroupError> {
    // (a, b) = i^a j^b with j i = i^-1 j and j^2 = i^2
    let mul = |x: &(u8, u8), y: &(u8, u8)| {
        if x.1 == 0 {
            ((x.0 + y.0) % 4, y.1)
        } else {
            let a = (x.0 + 4 - y.0) % 4;
            if y.1 == 0 {
                (a, 1)
            } else {
                ((a + 2) % 4, 0)
            }
        }
    };
    FiniteGroup::generate("Q8", (0, 0), vec![gen("i", (1, 0)), gen("j", (0, 1))], mul, max_order)
}

fn compose(p: &Vec<u8>, q: &Vec<u8>) -> Vec<u8> {
    q.iter().map(|&x| p[x as usize]).collect()
}

fn perm(n: usize, cycle: &[u8]) -> Vec<u8> {
    let mut p: Vec<u8> = (0..n as u8).collect();
    for (k, &c) in cycle.iter().enumerate() {
        p[c as usize] = cycle[(k + 1) % cycle.len()];
    }
    p
}

pub fn symmetric(n: usize, max_order: usize) -> Result<FiniteGroup, GroupError> {
    if !(1..=4).contains(&n) {
        return Err(GroupError::InvalidParams("symmetric groups are supported for 1 <= n <= 4".into()));
    }
    let id: Vec<u8> = (0..n as u8).collect();
    let mut gens = Vec::new();
    if n >= 3 {
        gens.push(gen("r", perm(n, &(0..n as u8).collect::<Vec<_>>())));
    }
    if n >= 2 {
        gens.push(gen("s", perm(n, &[0, 1])));
    }
    FiniteGroup::generate(format!("S{n}"), id, gens, compose, max_order)
}

pub fn alternating(n: usize, max_order: usize) -> Result<FiniteGroup, GroupError> {
    if !(1..=4).contains(&n) {
        return Err(GroupError::InvalidParams("alternating groups are supported for 1 <= n <= 4".into()));
    }
    let id: Vec<u8> = (0..n as u8).collect();
    let mut gens = Vec::new();
    if n >= 3 {
        gens.push(gen("a", perm(n, &[0, 1, 2])));
    }
    if n == 4 {
        gens.push(gen("b", perm(n, &[1, 2, 3])));
    }
    FiniteGroup::generate(format!("A{n}"), id, gens, compose, max_order)
}

/// Unitriangular 3x3 matrices over Z/p; `x`, `y` the elementary generators.
pub fn heisenberg(p: usize, max_order: usize) -> Result<FiniteGroup, GroupError> {
    if p < 2 {
        return Err(GroupError::InvalidParams("heisenberg needs p >= 2".into()));
    }
    if p.saturating_pow(3) > max_order {
        return Err(GroupError::BoundExceeded { name: format!("Heis({p})"), max: max_order });
    }
    // (a, b, c) = [[1, a, c], [0, 1, b], [0, 0, 1]]
    let mul = move |u: &(usize, usize, usize), v: &(usize, usize, usize)| {
        ((u.0 + v.0) % p, (u.1 + v.1) % p, (u.2 + v.2 + u.0 * v.1) % p)
    };
    FiniteGroup::generate(
        format!("Heis{p}"),
        (0, 0, 0),
        vec![gen("x", (1, 0, 0)), gen("y", (0, 1, 0))],
        mul,
        max_order,
    )
}

/// Builds a group from a preset string such as `cyclic:6`, `quaternion8`,
/// `dihedral:4` or a product `cyclic:2*cyclic:4`.
pub fn build_preset(spec: &str, max_order: usize) -> Result<FiniteGroup, GroupError> {
    let mut acc: Option<FiniteGroup> = None;
    for factor in spec.split('*') {
        let g = build_factor(factor.trim(), max_order)?;
        acc = Some(match acc {
            None => g,
            Some(a) => a.direct_product(&g, max_order)?,
        });
    }
    acc.ok_or_else(|| GroupError::InvalidParams("empty preset".into()))
}

fn build_factor(spec: &str, max_order: usize) -> Result<FiniteGroup, GroupError> {
    let (name, param) = match spec.split_once(':') {
        Some((a, b)) => (a, Some(b)),
        None => (spec, None),
    };
    let num = || -> Result<usize, GroupError> {
        param
            .ok_or_else(|| GroupError::InvalidParams(format!("preset `{name}` needs a parameter")))?
            .parse()
            .map_err(|_| GroupError::InvalidParams(format!("bad parameter in `{spec}`")))
    };
    match name {
        "trivial" => cyclic(1, max_order),
        "cyclic" => cyclic(num()?, max_order),
        "dihedral" => dihedral(num()?, max_order),
        "quaternion8" | "quaternion" => quaternion8(max_order),
        "symmetric" => symmetric(num()?, max_order),
        "alternating" => alternating(num()?, max_order),
        "heisenberg" => heisenberg(num()?, max_order),
        _ => Err(GroupError::InvalidParams(format!("unknown preset `{name}`"))),
    }
}
