//! Standard finite groupoids: pair groupoids, groups, products and disjoint
//! unions, plus seeded random generators.
//!
//! Every finite groupoid is a disjoint union of transitive pieces, and each
//! transitive piece is a pair groupoid on `k` points times a group `H`, so
//! [`transitive`] and [`disjoint_union`] reach every isomorphism class.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::groupoid::{FiniteGroupoid, RawGroupoid};

/// A finite group by its multiplication table. Index 0 is the identity.
#[derive(Clone, Debug)]
pub struct FiniteGroup {
    names: Vec<String>,
    mul: Vec<Vec<usize>>,
}

impl FiniteGroup {
    /// Builds a group from names and a product function; identity must be index 0.
    pub fn from_fn(names: Vec<String>, op: impl Fn(usize, usize) -> usize) -> Self {
        let n = names.len();
        let mul = (0..n).map(|a| (0..n).map(|b| op(a, b)).collect()).collect();
        FiniteGroup { names, mul }
    }

    pub fn order(&self) -> usize {
        self.names.len()
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a][b]
    }

    pub fn inverse(&self, a: usize) -> usize {
        (0..self.order())
            .find(|&b| self.mul[a][b] == 0)
            .expect("group element has an inverse")
    }

    /// ℤ/n with elements `e, g, g2, ..., g{n-1}`.
    pub fn cyclic(n: usize) -> Self {
        assert!(n >= 1);
        let names = (0..n)
            .map(|i| match i {
                0 => "e".to_string(),
                1 => "g".to_string(),
                _ => format!("g{i}"),
            })
            .collect();
        FiniteGroup::from_fn(names, |a, b| (a + b) % n)
    }

    pub fn product(a: &FiniteGroup, b: &FiniteGroup) -> Self {
        let nb = b.order();
        let names = (0..a.order() * nb)
            .map(|i| {
                let (x, y) = (i / nb, i % nb);
                match (x, y) {
                    (0, 0) => "e".to_string(),
                    _ => format!("({},{})", a.name(x), b.name(y)),
                }
            })
            .collect();
        FiniteGroup::from_fn(names, |i, j| {
            let (x1, y1) = (i / nb, i % nb);
            let (x2, y2) = (j / nb, j % nb);
            a.mul(x1, x2) * nb + b.mul(y1, y2)
        })
    }

    /// Dihedral group of order 2n: `r^i s^j` stored at `i + n·j`.
    pub fn dihedral(n: usize) -> Self {
        assert!(n >= 1);
        let names = (0..2 * n)
            .map(|k| {
                let (i, j) = (k % n, k / n);
                let r = match i {
                    0 => String::new(),
                    1 => "r".into(),
                    _ => format!("r{i}"),
                };
                match (r.is_empty(), j) {
                    (true, 0) => "e".into(),
                    (false, 0) => r,
                    (_, _) => format!("{r}s"),
                }
            })
            .collect();
        // r^i s^j · r^k s^l = r^(i + (-1)^j k) s^(j+l)
        FiniteGroup::from_fn(names, |a, b| {
            let (i, j) = (a % n, a / n);
            let (k, l) = (b % n, b / n);
            let rot = if j == 0 { (i + k) % n } else { (i + n - k) % n };
            rot + n * ((j + l) % 2)
        })
    }

    /// The quaternion group {±1, ±i, ±j, ±k}.
    pub fn quaternion() -> Self {
        // Index = 4·sign + axis, axis 0..4 = 1, i, j, k.
        let axis_names = ["1", "i", "j", "k"];
        let names = (0..8)
            .map(|x| match x {
                0 => "e".to_string(),
                _ => format!("{}{}", if x >= 4 { "-" } else { "" }, axis_names[x % 4]),
            })
            .collect();
        // (sign, axis) of axis products.
        let table = [
            [(0, 0), (0, 1), (0, 2), (0, 3)],
            [(0, 1), (1, 0), (0, 3), (1, 2)],
            [(0, 2), (1, 3), (1, 0), (0, 1)],
            [(0, 3), (0, 2), (1, 1), (1, 0)],
        ];
        FiniteGroup::from_fn(names, |a, b| {
            let (s, ax) = table[a % 4][b % 4];
            let sign = (a / 4 + b / 4 + s) % 2;
            4 * sign + ax
        })
    }

    /// All groups of order at most 8, up to isomorphism.
    pub fn all_up_to_order_8() -> Vec<FiniteGroup> {
        let c = FiniteGroup::cyclic;
        vec![
            c(1),
            c(2),
            c(3),
            c(4),
            FiniteGroup::product(&c(2), &c(2)),
            c(5),
            c(6),
            FiniteGroup::dihedral(3),
            c(7),
            c(8),
            FiniteGroup::product(&c(4), &c(2)),
            FiniteGroup::product(&FiniteGroup::product(&c(2), &c(2)), &c(2)),
            FiniteGroup::dihedral(4),
            FiniteGroup::quaternion(),
        ]
    }
}

/// The transitive groupoid `(pair groupoid on k points) × H`.
///
/// Element `(i, j, h)` has range `i` and source `j`. Names: with `k = 1`
/// the group's names; otherwise units are `u{i}`, arrows `g{i}_{j}`, and
/// arrows carrying a nontrivial group label get a `*{h}` suffix.
pub fn transitive_raw(k: usize, group: &FiniteGroup) -> RawGroupoid {
    assert!(k >= 1);
    let m = group.order();
    let name = |i: usize, j: usize, h: usize| -> String {
        if k == 1 {
            return group.name(h).to_string();
        }
        let base = if i == j && h == 0 {
            format!("u{}", i + 1)
        } else {
            format!("g{}_{}", i + 1, j + 1)
        };
        if h == 0 {
            base
        } else {
            format!("{base}*{}", group.name(h))
        }
    };
    // Units first, then the rest in (i, j, h) order.
    let mut order: Vec<(usize, usize, usize)> = (0..k).map(|i| (i, i, 0)).collect();
    for i in 0..k {
        for j in 0..k {
            for h in 0..m {
                if !(i == j && h == 0) {
                    order.push((i, j, h));
                }
            }
        }
    }
    let mut raw = RawGroupoid::default();
    for &(i, j, h) in &order {
        let x = name(i, j, h);
        raw.elements.push(x.clone());
        raw.source.insert(x.clone(), name(j, j, 0));
        raw.range.insert(x.clone(), name(i, i, 0));
        raw.inverse.insert(x, name(j, i, group.inverse(h)));
    }
    for &(i, j, h) in &order {
        for &(j2, l, h2) in &order {
            if j == j2 {
                raw.compose
                    .push([name(i, j, h), name(j2, l, h2), name(i, l, group.mul(h, h2))]);
            }
        }
    }
    raw
}

pub fn transitive(k: usize, group: &FiniteGroup) -> FiniteGroupoid {
    transitive_raw(k, group)
        .validate()
        .expect("transitive groupoid is valid")
}

/// The pair groupoid `{1..k}²`: principal and transitive.
pub fn pair_groupoid(k: usize) -> FiniteGroupoid {
    transitive(k, &FiniteGroup::cyclic(1))
}

/// A group viewed as a one-object groupoid.
pub fn group_groupoid(group: &FiniteGroup) -> FiniteGroupoid {
    transitive(1, group)
}

/// ℤ/n as a one-object groupoid, elements `e, g, g2, ...`.
pub fn cyclic_groupoid(n: usize) -> FiniteGroupoid {
    group_groupoid(&FiniteGroup::cyclic(n))
}

/// `m` units and nothing else.
pub fn isolated_units(m: usize) -> FiniteGroupoid {
    disjoint_union(&vec![pair_groupoid(1); m])
}

/// Disjoint union; with more than one part, names get a `c{index}.` prefix.
pub fn disjoint_union(parts: &[FiniteGroupoid]) -> FiniteGroupoid {
    disjoint_union_raw(&parts.iter().map(FiniteGroupoid::to_raw).collect::<Vec<_>>())
        .validate()
        .expect("disjoint union of groupoids is a groupoid")
}

pub fn disjoint_union_raw(parts: &[RawGroupoid]) -> RawGroupoid {
    if parts.len() == 1 {
        return parts[0].clone();
    }
    let mut out = RawGroupoid::default();
    for (c, part) in parts.iter().enumerate() {
        let p = |s: &String| format!("c{c}.{s}");
        out.elements.extend(part.elements.iter().map(p));
        for (dst, src) in [
            (&mut out.source, &part.source),
            (&mut out.range, &part.range),
            (&mut out.inverse, &part.inverse),
        ] {
            dst.extend(src.iter().map(|(k, v)| (p(k), p(v))));
        }
        out.compose
            .extend(part.compose.iter().map(|t| [p(&t[0]), p(&t[1]), p(&t[2])]));
    }
    out
}

/// Reorders the declared elements; the groupoid itself is unchanged.
pub fn shuffle_declaration<R: Rng>(raw: &mut RawGroupoid, rng: &mut R) {
    raw.elements.shuffle(rng);
}

/// A random principal groupoid with at most `max_elements` elements: a
/// disjoint union of pair groupoids with shuffled declaration order.
pub fn random_principal<R: Rng>(rng: &mut R, max_elements: usize) -> FiniteGroupoid {
    assert!(max_elements >= 1);
    let mut parts = Vec::new();
    let mut budget = max_elements;
    loop {
        let max_k = (1..).take_while(|k| k * k <= budget).last().unwrap_or(0);
        if max_k == 0 || (!parts.is_empty() && rng.gen_bool(0.3)) {
            break;
        }
        let k = rng.gen_range(1..=max_k);
        budget -= k * k;
        parts.push(transitive_raw(k, &FiniteGroup::cyclic(1)));
    }
    let mut raw = disjoint_union_raw(&parts);
    shuffle_declaration(&mut raw, rng);
    raw.validate().expect("random principal groupoid is valid")
}

/// A random groupoid (isotropy allowed) with at most `max_elements` elements.
pub fn random_groupoid<R: Rng>(rng: &mut R, max_elements: usize) -> FiniteGroupoid {
    assert!(max_elements >= 1);
    let groups = FiniteGroup::all_up_to_order_8();
    let mut parts = Vec::new();
    let mut budget = max_elements;
    loop {
        let options: Vec<(usize, &FiniteGroup)> = (1..=budget)
            .take_while(|k| k * k <= budget)
            .flat_map(|k| {
                groups
                    .iter()
                    .filter(move |g| k * k * g.order() <= budget)
                    .map(move |g| (k, g))
            })
            .collect();
        if options.is_empty() || (!parts.is_empty() && rng.gen_bool(0.3)) {
            break;
        }
        let (k, g) = options[rng.gen_range(0..options.len())];
        budget -= k * k * g.order();
        parts.push(transitive_raw(k, g));
    }
    let mut raw = disjoint_union_raw(&parts);
    shuffle_declaration(&mut raw, rng);
    raw.validate().expect("random groupoid is valid")
}

/// Every principal groupoid with at most `max_elements` elements, up to
/// isomorphism (multisets of pair-groupoid sizes with Σk² bounded).
pub fn all_principal_up_to(max_elements: usize) -> Vec<FiniteGroupoid> {
    fn rec(budget: usize, max_k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if !cur.is_empty() {
            out.push(cur.clone());
        }
        for k in (1..=max_k).rev() {
            if k * k <= budget {
                cur.push(k);
                rec(budget - k * k, k, cur, out);
                cur.pop();
            }
        }
    }
    let mut shapes = Vec::new();
    rec(max_elements, max_elements, &mut Vec::new(), &mut shapes);
    shapes
        .into_iter()
        .map(|ks| disjoint_union(&ks.into_iter().map(pair_groupoid).collect::<Vec<_>>()))
        .collect()
}

/// Every groupoid with at most `max_elements` elements, up to isomorphism,
/// for `max_elements <= 8` (the group list stops at order 8).
pub fn all_groupoids_up_to(max_elements: usize) -> Vec<FiniteGroupoid> {
    assert!(max_elements <= 8, "group catalogue only covers orders up to 8");
    let groups = FiniteGroup::all_up_to_order_8();
    let mut pieces: Vec<(usize, usize)> = Vec::new(); // (k, group index)
    for k in 1..=max_elements {
        for (gi, g) in groups.iter().enumerate() {
            if k * k * g.order() <= max_elements {
                pieces.push((k, gi));
            }
        }
    }
    let size = |&(k, gi): &(usize, usize)| k * k * groups[gi].order();
    fn rec(
        start: usize,
        budget: usize,
        pieces: &[(usize, usize)],
        size: &dyn Fn(&(usize, usize)) -> usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if !cur.is_empty() {
            out.push(cur.clone());
        }
        for i in start..pieces.len() {
            let s = size(&pieces[i]);
            if s <= budget {
                cur.push(i);
                rec(i, budget - s, pieces, size, cur, out);
                cur.pop();
            }
        }
    }
    let mut combos = Vec::new();
    rec(0, max_elements, &pieces, &size, &mut Vec::new(), &mut combos);
    combos
        .into_iter()
        .map(|c| {
            let raws: Vec<RawGroupoid> = c
                .into_iter()
                .map(|i| transitive_raw(pieces[i].0, &groups[pieces[i].1]))
                .collect();
            disjoint_union_raw(&raws)
                .validate()
                .expect("union of transitive groupoids is valid")
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn is_group(g: &FiniteGroup) -> bool {
        let n = g.order();
        (0..n).all(|a| g.mul(0, a) == a && g.mul(a, 0) == a && g.mul(a, g.inverse(a)) == 0)
            && (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c)))))
    }

    #[test]
    fn catalogue_groups_are_groups() {
        let groups = FiniteGroup::all_up_to_order_8();
        assert_eq!(groups.len(), 14);
        for g in &groups {
            assert!(is_group(g));
        }
        let q8 = FiniteGroup::quaternion();
        // Q8 has a unique element of order 2.
        let involutions = (1..8).filter(|&a| q8.mul(a, a) == 0).count();
        assert_eq!(involutions, 1);
        let d4 = FiniteGroup::dihedral(4);
        assert_eq!((1..8).filter(|&a| d4.mul(a, a) == 0).count(), 5);
    }

    #[test]
    fn pair_groupoid_shape() {
        let g = pair_groupoid(3);
        assert_eq!(g.len(), 9);
        assert_eq!(g.units().len(), 3);
        assert!(g.is_principal());
        assert_eq!(g.name(g.units()[0]), "u1");
    }

    #[test]
    fn principal_catalogue_up_to_six() {
        let all = all_principal_up_to(6);
        // 1..=6 isolated units, {2}, {2,1}, {2,1,1}
        assert_eq!(all.len(), 9);
        assert!(all.iter().all(|g| g.is_principal() && g.len() <= 6));
    }

    #[test]
    fn random_generators_respect_bounds() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..30 {
            let g = random_principal(&mut rng, 10);
            assert!(g.len() <= 10 && g.is_principal());
            let h = random_groupoid(&mut rng, 20);
            assert!(h.len() <= 20);
        }
    }

    #[test]
    fn groupoid_catalogue_up_to_four() {
        // Pieces of size ≤ 4: Z1, Z2, Z3, Z4, Z2², pair(2). Multisets with total ≤ 4.
        let all = all_groupoids_up_to(4);
        assert!(all.iter().all(|g| g.len() <= 4));
        assert_eq!(all.len(), 13);
    }
}
