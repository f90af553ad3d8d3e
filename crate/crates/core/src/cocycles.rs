//! Third-cohomology representatives on finite abelian groups, their
//! evaluation and verification, the induced degree-fixed 2-cochains, and
//! quasi-characters of symmetric 2-cocycles.
//!
//! All cochain values are roots of unity; they are stored as integer
//! exponents of a fixed primitive root ζ_N, so every identity is checked by
//! exact modular arithmetic.

use crate::groups::{Elem, GroupSpec, SquaredCover};
use crate::scalars::CycScalar;
use std::collections::BTreeMap;

/// A fully normalized 3-cocycle representative on ∏_l ℤ/m_l.
///
/// With N the group exponent and carry_l(y, z) = 1 when y_l + z_l ≥ m_l,
/// the exponent of ζ_N is
///
/// ```text
///   Σ_l (N/m_l)·a_l·x_l·carry_l(y,z)
/// + Σ_{s<t} (N/m_t)·b_{st}·x_t·carry_s(y,z)
/// + Σ_{r<s<t} (N/gcd(m_r,m_s,m_t))·c_{rst}·z_r·y_s·x_t
/// ```
///
/// with 0 ≤ a_l < m_l, 0 ≤ b_{st} < gcd(m_s, m_t), and
/// 0 ≤ c_{rst} < gcd(m_r, m_s, m_t).  Distinct parameter tuples give
/// distinct cohomology classes, and every class contains exactly one such
/// representative.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CocycleSpec {
    /// The underlying group.
    pub group: GroupSpec,
    /// One parameter per cyclic factor, `c_single[i]` in `0..m_i`.
    pub c_single: Vec<u32>,
    /// Keyed by 0-based factor pairs (s, t) with s < t.
    pub c_pair: BTreeMap<(usize, usize), u32>,
    /// Keyed by 0-based factor triples (r, s, t) with r < s < t.
    pub c_triple: BTreeMap<(usize, usize, usize), u32>,
}

fn gcd_u32(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd_u32(b, a % b)
    }
}

impl CocycleSpec {
    /// The identity class: all parameters zero.
    pub fn trivial(group: GroupSpec) -> Self {
        let c_single = vec![0; group.rank()];
        CocycleSpec { group, c_single, c_pair: BTreeMap::new(), c_triple: BTreeMap::new() }
    }

    /// Validate parameter ranges against the factor orders.
    pub fn validate(&self) -> Result<(), String> {
        let m = self.group.orders();
        if self.c_single.len() != m.len() {
            return Err(format!(
                "expected {} single-index parameters, found {}",
                m.len(),
                self.c_single.len()
            ));
        }
        for (l, &c) in self.c_single.iter().enumerate() {
            if c >= m[l] {
                return Err(format!(
                    "single-index parameter {} out of range: {} ≥ {}",
                    l + 1,
                    c,
                    m[l]
                ));
            }
        }
        for (&(s, t), &c) in &self.c_pair {
            if !(s < t && t < m.len()) {
                return Err(format!("pair index ({},{}) out of range", s + 1, t + 1));
            }
            let g = gcd_u32(m[s], m[t]);
            if c >= g {
                return Err(format!(
                    "pair parameter ({},{}) out of range: {} ≥ {}",
                    s + 1,
                    t + 1,
                    c,
                    g
                ));
            }
        }
        for (&(r, s, t), &c) in &self.c_triple {
            if !(r < s && s < t && t < m.len()) {
                return Err(format!("triple index ({},{},{}) out of range", r + 1, s + 1, t + 1));
            }
            let g = gcd_u32(gcd_u32(m[r], m[s]), m[t]);
            if c >= g {
                return Err(format!(
                    "triple parameter ({},{},{}) out of range: {} ≥ {}",
                    r + 1,
                    s + 1,
                    t + 1,
                    c,
                    g
                ));
            }
        }
        Ok(())
    }

    /// Exponent of ζ_N at (x, y, z), reduced into 0..N.
    pub fn eval_exp(&self, x: &Elem, y: &Elem, z: &Elem) -> i64 {
        let m = self.group.orders();
        let n = self.group.exponent() as i64;
        let mut acc: i64 = 0;
        for (l, &c) in self.c_single.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let carry = (y[l] + z[l] >= m[l]) as i64;
            acc += (n / m[l] as i64) * c as i64 * x[l] as i64 * carry;
        }
        for (&(s, t), &c) in &self.c_pair {
            if c == 0 {
                continue;
            }
            let carry = (y[s] + z[s] >= m[s]) as i64;
            acc += (n / m[t] as i64) * c as i64 * x[t] as i64 * carry;
        }
        for (&(r, s, t), &c) in &self.c_triple {
            if c == 0 {
                continue;
            }
            let g = gcd_u32(gcd_u32(m[r], m[s]), m[t]) as i64;
            acc += (n / g) * c as i64 * z[r] as i64 * y[s] as i64 * x[t] as i64;
        }
        acc.rem_euclid(n)
    }

    /// Whether every parameter is zero (the trivial class).
    pub fn is_trivial(&self) -> bool {
        self.c_single.iter().all(|&c| c == 0)
            && self.c_pair.values().all(|&c| c == 0)
            && self.c_triple.values().all(|&c| c == 0)
    }

    /// Whether the associated degree-fixed 2-cochains are all symmetric
    /// (equivalently: no nonzero triple-index parameter).
    pub fn has_no_triple_part(&self) -> bool {
        self.c_triple.values().all(|&c| c == 0)
    }
}

/// A 3-cocycle in evaluable form: either a normalized representative, an
/// explicit exponent table, or a pullback along the squared-cover
/// projection.
#[derive(Clone, Debug)]
pub enum CocycleData {
    /// A normalized canonical representative.
    Rep(CocycleSpec),
    /// A dense exponent table.
    Table(CocycleTable),
    /// A cocycle on a covering group obtained by composing one on the base
    /// group with the coordinatewise projection.
    Pulled {
        /// The cocycle on the base group.
        base: Box<CocycleData>,
        /// The base group.
        base_group: GroupSpec,
        /// The covering group the pullback lives on.
        cover: GroupSpec,
    },
}

/// Dense exponent table over a (small) group: entry at
/// (index(x)·|G| + index(y))·|G| + index(z).
#[derive(Clone, Debug)]
pub struct CocycleTable {
    /// The underlying group.
    pub group: GroupSpec,
    /// The root-of-unity order N the exponents refer to.
    pub root_order: u32,
    /// Exponents in enumeration order, one per argument triple.
    pub exps: Vec<i64>,
}

impl CocycleTable {
    /// Exponent of ζ_N at (x, y, z).
    pub fn eval_exp(&self, x: &Elem, y: &Elem, z: &Elem) -> i64 {
        let n = self.group.size() as usize;
        let idx = (self.group.index_of(x) * n + self.group.index_of(y)) * n
            + self.group.index_of(z);
        self.exps[idx]
    }

    /// Whether every exponent vanishes modulo N.
    pub fn is_trivial(&self) -> bool {
        self.exps.iter().all(|&e| e.rem_euclid(self.root_order as i64) == 0)
    }
}

impl CocycleData {
    /// The group the cocycle lives on (the cover, for pullbacks).
    pub fn group(&self) -> &GroupSpec {
        match self {
            CocycleData::Rep(s) => &s.group,
            CocycleData::Table(t) => &t.group,
            CocycleData::Pulled { cover, .. } => cover,
        }
    }

    /// The root-of-unity order of the values.
    pub fn root_order(&self) -> u32 {
        match self {
            CocycleData::Rep(s) => s.group.exponent(),
            CocycleData::Table(t) => t.root_order,
            CocycleData::Pulled { base, .. } => base.root_order(),
        }
    }

    /// Exponent of ζ_N at (x, y, z).
    pub fn eval_exp(&self, x: &Elem, y: &Elem, z: &Elem) -> i64 {
        match self {
            CocycleData::Rep(s) => s.eval_exp(x, y, z),
            CocycleData::Table(t) => t.eval_exp(x, y, z).rem_euclid(t.root_order as i64),
            CocycleData::Pulled { base, base_group, cover } => {
                let p = |e: &Elem| -> Elem {
                    e.iter().zip(base_group.orders()).map(|(v, m)| v % m).collect()
                };
                let _ = cover;
                base.eval_exp(&p(x), &p(y), &p(z))
            }
        }
    }

    /// Value at (x, y, z) as an exact root of unity.
    pub fn eval(&self, x: &Elem, y: &Elem, z: &Elem) -> CycScalar {
        CycScalar::root_of_unity(self.root_order(), self.eval_exp(x, y, z))
    }

    /// True when every value is 1.
    pub fn is_trivial_everywhere(&self) -> bool {
        match self {
            CocycleData::Rep(s) => s.is_trivial(),
            CocycleData::Table(t) => t.is_trivial(),
            CocycleData::Pulled { base, .. } => base.is_trivial_everywhere(),
        }
    }
}

/// Pull a cocycle on the base back along the squared-cover projection.
pub fn pullback(data: &CocycleData, cover: &SquaredCover) -> CocycleData {
    assert_eq!(
        data.group(),
        &cover.base,
        "cocycle group does not match the cover base"
    );
    CocycleData::Pulled {
        base: Box::new(data.clone()),
        base_group: cover.base.clone(),
        cover: cover.cover.clone(),
    }
}

/// A counterexample to the 3-cocycle identity or to normalization.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CocycleFailure {
    /// ω is nonzero on a triple containing the identity.
    NotNormalized {
        /// The offending argument triple.
        args: [Elem; 3],
    },
    /// The rebracketing identity fails at a quadruple.
    IdentityFails {
        /// The offending argument quadruple.
        args: [Elem; 4],
    },
}

/// Check normalization and the 3-cocycle identity
/// ω(y,z,w)·ω(x,yz,w)·ω(x,y,z) = ω(xy,z,w)·ω(x,y,zw) over the whole group,
/// reporting the first counterexample in enumeration order.
pub fn verify_3cocycle(data: &CocycleData) -> Result<(), CocycleFailure> {
    let g = data.group().clone();
    let n = data.root_order() as i64;
    let elems = g.elems();
    for x in &elems {
        for y in &elems {
            for z in &elems {
                if (g.is_zero(x) || g.is_zero(y) || g.is_zero(z))
                    && data.eval_exp(x, y, z).rem_euclid(n) != 0
                {
                    return Err(CocycleFailure::NotNormalized {
                        args: [x.clone(), y.clone(), z.clone()],
                    });
                }
            }
        }
    }
    for x in &elems {
        for y in &elems {
            let xy = g.add(x, y);
            for z in &elems {
                let yz = g.add(y, z);
                for w in &elems {
                    let zw = g.add(z, w);
                    let lhs = data.eval_exp(y, z, w)
                        + data.eval_exp(x, &yz, w)
                        + data.eval_exp(x, y, z);
                    let rhs = data.eval_exp(&xy, z, w) + data.eval_exp(x, y, &zw);
                    if (lhs - rhs).rem_euclid(n) != 0 {
                        return Err(CocycleFailure::IdentityFails {
                            args: [x.clone(), y.clone(), z.clone(), w.clone()],
                        });
                    }
                }
            }
        }
    }
    Ok(())
}

/// A 2-cochain on a group, as a dense table of exponents of ζ_N.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Cochain2 {
    /// The underlying group.
    pub group: GroupSpec,
    /// The root-of-unity order N of the values.
    pub root_order: u32,
    /// Entry at index(x)·|G| + index(y), reduced into 0..N.
    pub exps: Vec<i64>,
}

impl Cochain2 {
    /// The zero cochain.
    pub fn zero(group: GroupSpec, root_order: u32) -> Self {
        let sz = group.size() as usize;
        Cochain2 { group, root_order, exps: vec![0; sz * sz] }
    }

    /// Tabulate `f` over all argument pairs, reducing modulo N.
    pub fn from_fn(group: GroupSpec, root_order: u32, f: impl Fn(&Elem, &Elem) -> i64) -> Self {
        let elems = group.elems();
        let mut exps = Vec::with_capacity(elems.len() * elems.len());
        for x in &elems {
            for y in &elems {
                exps.push(f(x, y).rem_euclid(root_order as i64));
            }
        }
        Cochain2 { group, root_order, exps }
    }

    /// Exponent of ζ_N at (x, y).
    pub fn eval_exp(&self, x: &Elem, y: &Elem) -> i64 {
        let n = self.group.size() as usize;
        self.exps[self.group.index_of(x) * n + self.group.index_of(y)]
    }

    /// Value at (x, y) as an exact root of unity.
    pub fn eval(&self, x: &Elem, y: &Elem) -> CycScalar {
        CycScalar::root_of_unity(self.root_order, self.eval_exp(x, y))
    }

    /// Pointwise product (exponents add).
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.group, other.group);
        assert_eq!(self.root_order, other.root_order);
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| (a + b).rem_euclid(self.root_order as i64))
            .collect();
        Cochain2 { group: self.group.clone(), root_order: self.root_order, exps }
    }

    /// Pointwise inverse (exponents negate).
    pub fn inv(&self) -> Self {
        let exps = self
            .exps
            .iter()
            .map(|a| (-a).rem_euclid(self.root_order as i64))
            .collect();
        Cochain2 { group: self.group.clone(), root_order: self.root_order, exps }
    }

    /// Whether F(x,y) = F(y,x) everywhere.
    pub fn is_symmetric(&self) -> bool {
        let n = self.group.size() as usize;
        for i in 0..n {
            for j in 0..i {
                if self.exps[i * n + j] != self.exps[j * n + i] {
                    return false;
                }
            }
        }
        true
    }

    /// Whether every exponent is zero.
    pub fn is_trivial(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    /// The alternation x,y ↦ F(x,y) − F(y,x) (a bicharacter exponent table
    /// when F is a 2-cocycle on an abelian group).
    pub fn alternation(&self) -> Self {
        Cochain2::from_fn(self.group.clone(), self.root_order, |x, y| {
            self.eval_exp(x, y) - self.eval_exp(y, x)
        })
    }

    /// Satisfies F(y,z)+F(x,yz) ≡ F(xy,z)+F(x,y)?  (2-cocycle identity.)
    pub fn is_two_cocycle(&self) -> bool {
        let g = &self.group;
        let n = self.root_order as i64;
        let elems = g.elems();
        for x in &elems {
            for y in &elems {
                let xy = g.add(x, y);
                for z in &elems {
                    let yz = g.add(y, z);
                    let lhs = self.eval_exp(y, z) + self.eval_exp(x, &yz);
                    let rhs = self.eval_exp(&xy, z) + self.eval_exp(x, y);
                    if (lhs - rhs).rem_euclid(n) != 0 {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Exponent of the 3-coboundary (∂F)(x,y,z) =
    /// F(y,z)·F(x,yz)·F(xy,z)⁻¹·F(x,y)⁻¹.
    pub fn coboundary_exp(&self, x: &Elem, y: &Elem, z: &Elem) -> i64 {
        let g = &self.group;
        let xy = g.add(x, y);
        let yz = g.add(y, z);
        (self.eval_exp(y, z) + self.eval_exp(x, &yz)
            - self.eval_exp(&xy, z)
            - self.eval_exp(x, y))
        .rem_euclid(self.root_order as i64)
    }

    /// Materialize the 3-coboundary as a cocycle table.
    pub fn coboundary_table(&self) -> CocycleTable {
        let g = self.group.clone();
        let elems = g.elems();
        let mut exps = Vec::with_capacity(elems.len().pow(3));
        for x in &elems {
            for y in &elems {
                for z in &elems {
                    exps.push(self.coboundary_exp(x, y, z));
                }
            }
        }
        CocycleTable { group: g, root_order: self.root_order, exps }
    }
}

/// The degree-g 2-cochain Φ̃_g(x,y) = ω(g,x,y)·ω(x,y,g)·ω(x,g,y)⁻¹, as an
/// exponent table.  For a closed ω on an abelian group this is a 2-cocycle
/// and g ↦ Φ̃_g is multiplicative; both facts are exercised by tests rather
/// than assumed here.
pub fn tilde_phi(data: &CocycleData, g: &Elem) -> Cochain2 {
    let grp = data.group().clone();
    Cochain2::from_fn(grp, data.root_order(), |x, y| {
        data.eval_exp(g, x, y) + data.eval_exp(x, y, g) - data.eval_exp(x, g, y)
    })
}

/// Exponent-only evaluation of Φ̃_g(x,y) without materializing the table.
pub fn tilde_phi_exp(data: &CocycleData, g: &Elem, x: &Elem, y: &Elem) -> i64 {
    (data.eval_exp(g, x, y) + data.eval_exp(x, y, g) - data.eval_exp(x, g, y))
        .rem_euclid(data.root_order() as i64)
}

/// Whether all degree-fixed 2-cochains of the cocycle are symmetric.
///
/// Two independent routes are used and must agree: for a normalized
/// representative, symmetry holds exactly when all triple-index parameters
/// vanish; in general, the alternation of Φ̃ is bimultiplicative, so
/// symmetry on all generator triples decides it.
pub fn is_abelian(data: &CocycleData) -> bool {
    let g = data.group().clone();
    let n = data.root_order() as i64;
    let gens = g.generators();
    let mut by_generators = true;
    'outer: for a in &gens {
        for x in &gens {
            for y in &gens {
                let fwd = tilde_phi_exp(data, a, x, y);
                let bwd = tilde_phi_exp(data, a, y, x);
                if (fwd - bwd).rem_euclid(n) != 0 {
                    by_generators = false;
                    break 'outer;
                }
            }
        }
    }
    if let CocycleData::Rep(spec) = data {
        let by_params = spec.has_no_triple_part();
        assert_eq!(
            by_params, by_generators,
            "symmetry detection routes disagree; representative evaluation is broken"
        );
    }
    by_generators
}

/// All normalized representatives on the group, in lexicographic parameter
/// order (single-index block first, then pairs, then triples).
pub fn representatives(group: &GroupSpec) -> Vec<CocycleSpec> {
    let m = group.orders();
    let k = m.len();
    let mut slots: Vec<(SlotKey, u32)> = Vec::new();
    for l in 0..k {
        slots.push((SlotKey::Single(l), m[l]));
    }
    for s in 0..k {
        for t in s + 1..k {
            slots.push((SlotKey::Pair(s, t), gcd_u32(m[s], m[t])));
        }
    }
    for r in 0..k {
        for s in r + 1..k {
            for t in s + 1..k {
                slots.push((SlotKey::Triple(r, s, t), gcd_u32(gcd_u32(m[r], m[s]), m[t])));
            }
        }
    }
    let mut out = Vec::new();
    let mut values = vec![0u32; slots.len()];
    loop {
        let mut spec = CocycleSpec::trivial(group.clone());
        for ((key, _), &v) in slots.iter().zip(&values) {
            match *key {
                SlotKey::Single(l) => spec.c_single[l] = v,
                SlotKey::Pair(s, t) => {
                    spec.c_pair.insert((s, t), v);
                }
                SlotKey::Triple(r, s, t) => {
                    spec.c_triple.insert((r, s, t), v);
                }
            }
        }
        out.push(spec);
        // Odometer increment, last slot fastest.
        let mut i = slots.len();
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            values[i] += 1;
            if values[i] < slots[i].1 {
                break;
            }
            values[i] = 0;
        }
    }
}

#[derive(Clone, Copy)]
enum SlotKey {
    Single(usize),
    Pair(usize, usize),
    Triple(usize, usize, usize),
}

/// Number of normalized representatives on the group.
pub fn representative_count(group: &GroupSpec) -> u64 {
    let m = group.orders();
    let k = m.len();
    let mut count: u64 = 1;
    for l in 0..k {
        count *= m[l] as u64;
    }
    for s in 0..k {
        for t in s + 1..k {
            count *= gcd_u32(m[s], m[t]) as u64;
        }
    }
    for r in 0..k {
        for s in r + 1..k {
            for t in s + 1..k {
                count *= gcd_u32(gcd_u32(m[r], m[s]), m[t]) as u64;
            }
        }
    }
    count
}

/// All factor lists (each factor ≥ 2, nondecreasing, at most `max_factors`
/// of them) whose product is at most `max_size`, in lexicographic order.
pub fn group_universe(max_size: u64, max_factors: usize) -> Vec<GroupSpec> {
    let mut out = Vec::new();
    let mut cur: Vec<u32> = Vec::new();
    fn rec(out: &mut Vec<GroupSpec>, cur: &mut Vec<u32>, max_size: u64, max_factors: usize, min_factor: u32, product: u64) {
        if !cur.is_empty() {
            out.push(GroupSpec::new(cur.clone()));
        }
        if cur.len() == max_factors {
            return;
        }
        let mut f = min_factor;
        while product * f as u64 <= max_size {
            cur.push(f);
            rec(out, cur, max_size, max_factors, f, product * f as u64);
            cur.pop();
            f += 1;
        }
    }
    rec(&mut out, &mut cur, max_size, max_factors, 2, 1);
    out.sort();
    out
}

/// A quasi-character of a symmetric 2-cocycle F: a function χ with
/// χ(x)·χ(y) = F(x,y)·χ(x+y), stored as exponents of ζ_M.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QuasiChar {
    /// The underlying group.
    pub group: GroupSpec,
    /// The root-of-unity order M of the values.
    pub root_order: u32,
    /// Exponent of ζ_M at each element, indexed by enumeration order.
    pub exps: Vec<i64>,
}

impl QuasiChar {
    /// Exponent of ζ_M at x.
    pub fn eval_exp(&self, x: &Elem) -> i64 {
        self.exps[self.group.index_of(x)]
    }

    /// Value at x as an exact root of unity.
    pub fn eval(&self, x: &Elem) -> CycScalar {
        CycScalar::root_of_unity(self.root_order, self.eval_exp(x))
    }
}

/// All quasi-characters of a 2-cochain table.  Empty when the table is not
/// symmetric (and also when it is symmetric but not a 2-cocycle, since a
/// verified solution would certify closedness).  For a symmetric 2-cocycle
/// there are exactly |G| of them, in a deterministic order.
pub fn quasi_characters(f: &Cochain2) -> Vec<QuasiChar> {
    if !f.is_symmetric() {
        return vec![];
    }
    let g = f.group.clone();
    let n = f.root_order as i64;
    let m_big = n * g.exponent() as i64;
    let scale = m_big / n;
    let rank = g.rank();
    let orders = g.orders().to_vec();

    // Per-generator value sets from the telescoped power relation:
    // m_i·t(e_i) ≡ (M/N)·Σ_{j=1}^{m_i−1} F(e_i, j·e_i)  (mod M).
    let mut per_gen: Vec<Vec<i64>> = Vec::with_capacity(rank);
    for i in 0..rank {
        let m_i = orders[i] as i64;
        let e_i = g.generator(i);
        let mut r: i64 = 0;
        for j in 1..orders[i] {
            let p = g.scale(j as i64, &e_i);
            r += scale * f.eval_exp(&e_i, &p);
        }
        let r = r.rem_euclid(m_big);
        if r % m_i != 0 {
            // No solution for this generator: the table is not a cocycle.
            return vec![];
        }
        let t0 = (r / m_i).rem_euclid(m_big / m_i);
        per_gen.push((0..m_i).map(|k| (t0 + k * (m_big / m_i)).rem_euclid(m_big)).collect());
    }

    // Enumerate all generator-value combinations in lexicographic order and
    // peel each out to a full table.
    let combos = per_gen.iter().map(|v| v.len()).product::<usize>();
    let elems = g.elems();
    let mut out = Vec::with_capacity(combos);
    let mut pick = vec![0usize; rank];
    let mut done = false;
    while !done {
        let mut exps = vec![0i64; elems.len()];
        for (idx, x) in elems.iter().enumerate() {
            if g.is_zero(x) {
                continue;
            }
            let l = x.iter().position(|&c| c != 0).unwrap();
            let e_l = g.generator(l);
            let xp = g.sub(x, &e_l);
            let t = exps[g.index_of(&xp)] + per_gen[l][pick[l]] - scale * f.eval_exp(&e_l, &xp);
            exps[idx] = t.rem_euclid(m_big);
        }
        // Pointwise verification: χ(x)·χ(y) = F(x,y)·χ(x+y).
        let mut valid = true;
        'check: for x in &elems {
            for y in &elems {
                let xy = g.add(x, y);
                let lhs = exps[g.index_of(x)] + exps[g.index_of(y)];
                let rhs = scale * f.eval_exp(x, y) + exps[g.index_of(&xy)];
                if (lhs - rhs).rem_euclid(m_big) != 0 {
                    valid = false;
                    break 'check;
                }
            }
        }
        if valid {
            out.push(QuasiChar { group: g.clone(), root_order: m_big as u32, exps });
        }
        // Odometer over picks, last coordinate fastest.
        if rank == 0 {
            done = true;
        } else {
            let mut i = rank;
            loop {
                if i == 0 {
                    done = true;
                    break;
                }
                i -= 1;
                pick[i] += 1;
                if pick[i] < per_gen[i].len() {
                    break;
                }
                pick[i] = 0;
            }
        }
    }
    // Either the table is a cocycle (every candidate verifies) or it is
    // not (no candidate can verify).
    assert!(
        out.is_empty() || out.len() == combos,
        "verification accepted only part of the candidate set"
    );
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z2_cube_triple() -> CocycleData {
        let g = GroupSpec::new(vec![2, 2, 2]);
        let mut spec = CocycleSpec::trivial(g);
        spec.c_triple.insert((0, 1, 2), 1);
        CocycleData::Rep(spec)
    }

    #[test]
    fn triple_term_orientation() {
        let om = z2_cube_triple();
        let e1 = vec![1, 0, 0];
        let e2 = vec![0, 1, 0];
        let e3 = vec![0, 0, 1];
        // Third argument contributes its first coordinate, first argument
        // its last.
        assert_eq!(om.eval_exp(&e3, &e2, &e1), 1);
        assert_eq!(om.eval_exp(&e1, &e2, &e3), 0);
        assert_eq!(om.eval(&e3, &e2, &e1), CycScalar::from_int(2, -1));
    }

    #[test]
    fn representatives_all_verify_on_small_groups() {
        for spec_orders in [vec![2, 2, 2], vec![2, 4], vec![3, 3], vec![6]] {
            let g = GroupSpec::new(spec_orders);
            let reps = representatives(&g);
            assert_eq!(reps.len() as u64, representative_count(&g));
            for rep in reps {
                assert!(rep.validate().is_ok());
                let data = CocycleData::Rep(rep.clone());
                assert_eq!(
                    verify_3cocycle(&data),
                    Ok(()),
                    "representative failed: {:?}",
                    rep
                );
            }
        }
    }

    #[test]
    fn representative_counts_match_cohomology_sizes() {
        assert_eq!(representative_count(&GroupSpec::new(vec![2, 2, 2])), 128);
        assert_eq!(representative_count(&GroupSpec::new(vec![2, 2, 4])), 256);
        assert_eq!(representative_count(&GroupSpec::new(vec![6])), 6);
        assert_eq!(representative_count(&GroupSpec::new(vec![2, 3])), 6 * 1);
        assert_eq!(representative_count(&GroupSpec::new(vec![6, 6, 6])), 216 * 216 * 6);
    }

    #[test]
    fn degree_fixed_cochain_known_values() {
        let om = z2_cube_triple();
        let e1 = vec![1, 0, 0];
        let e2 = vec![0, 1, 0];
        let e3 = vec![0, 0, 1];
        let phi = tilde_phi(&om, &e1);
        assert_eq!(phi.eval_exp(&e2, &e3), 0);
        assert_eq!(phi.eval_exp(&e3, &e2), 1);
        assert!(!phi.is_symmetric());
        // Same degree always commutes with itself and with its own degree.
        for h in om.group().elems() {
            let p = tilde_phi(&om, &h);
            for x in om.group().elems() {
                assert_eq!(p.eval_exp(&h, &x), p.eval_exp(&x, &h));
            }
        }
    }

    #[test]
    fn degree_fixed_cochains_are_cocycles_and_multiplicative() {
        let cases: Vec<CocycleData> = vec![
            z2_cube_triple(),
            {
                let g = GroupSpec::new(vec![2, 4]);
                let mut s = CocycleSpec::trivial(g);
                s.c_single[1] = 3;
                s.c_pair.insert((0, 1), 1);
                CocycleData::Rep(s)
            },
            {
                let g = GroupSpec::new(vec![4]);
                let mut s = CocycleSpec::trivial(g);
                s.c_single[0] = 2;
                CocycleData::Rep(s)
            },
        ];
        for om in cases {
            let g = om.group().clone();
            let n = om.root_order() as i64;
            let tables: Vec<Cochain2> =
                g.elems().iter().map(|h| tilde_phi(&om, h)).collect();
            for t in &tables {
                assert!(t.is_two_cocycle());
            }
            for (i, a) in g.elems().iter().enumerate() {
                for (j, b) in g.elems().iter().enumerate() {
                    let ab = g.add(a, b);
                    let k = g.index_of(&ab);
                    for x in g.elems() {
                        for y in g.elems() {
                            let lhs =
                                tables[i].eval_exp(&x, &y) + tables[j].eval_exp(&x, &y);
                            let rhs = tables[k].eval_exp(&x, &y);
                            assert_eq!((lhs - rhs).rem_euclid(n), 0);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn symmetry_routes_agree_exhaustively() {
        for orders in [vec![2, 2, 2], vec![2, 2, 4]] {
            let g = GroupSpec::new(orders);
            for rep in representatives(&g) {
                let data = CocycleData::Rep(rep.clone());
                // is_abelian internally asserts that parameter-based and
                // evaluation-based detection agree.
                let ab = is_abelian(&data);
                assert_eq!(ab, rep.has_no_triple_part());
            }
        }
    }

    #[test]
    fn pullback_evaluates_through_projection() {
        let base = GroupSpec::new(vec![2, 2]);
        let mut s = CocycleSpec::trivial(base.clone());
        s.c_single[0] = 1;
        s.c_pair.insert((0, 1), 1);
        let data = CocycleData::Rep(s);
        let cov = SquaredCover::new(&base);
        let pulled = pullback(&data, &cov);
        assert_eq!(verify_3cocycle(&pulled), Ok(()));
        for x in cov.cover.elems() {
            for y in cov.cover.elems() {
                for z in cov.cover.elems() {
                    let want =
                        data.eval_exp(&cov.project(&x), &cov.project(&y), &cov.project(&z));
                    assert_eq!(pulled.eval_exp(&x, &y, &z), want);
                }
            }
        }
    }

    #[test]
    fn broken_table_is_reported_with_first_counterexample() {
        // On ℤ/2 every normalized table is closed, so the single nontrivial
        // normalized table must verify.
        let z2 = GroupSpec::new(vec![2]);
        let mut exps = vec![0i64; 8];
        exps[7] = 1;
        let t = CocycleData::Table(CocycleTable { group: z2, root_order: 2, exps });
        assert_eq!(verify_3cocycle(&t), Ok(()));
        // On ℤ/4 a lone nonzero entry at (1,1,1) breaks the identity; the
        // first counterexample in enumeration order is (1,1,1,1).
        let z4 = GroupSpec::new(vec![4]);
        let mut exps = vec![0i64; 64];
        exps[(1 * 4 + 1) * 4 + 1] = 1;
        let t = CocycleData::Table(CocycleTable { group: z4, root_order: 4, exps });
        match verify_3cocycle(&t) {
            Err(CocycleFailure::IdentityFails { args }) => {
                assert_eq!(args, [vec![1], vec![1], vec![1], vec![1]]);
            }
            other => panic!("expected identity failure, got {:?}", other),
        }
        // A table violating normalization is reported as such.
        let z4b = GroupSpec::new(vec![4]);
        let mut exps = vec![0i64; 64];
        exps[2] = 1; // entry at (0, 0, 2)
        let t = CocycleData::Table(CocycleTable { group: z4b, root_order: 4, exps });
        match verify_3cocycle(&t) {
            Err(CocycleFailure::NotNormalized { args }) => {
                assert_eq!(args, [vec![0], vec![0], vec![2]]);
            }
            other => panic!("expected normalization failure, got {:?}", other),
        }
    }

    #[test]
    fn quasi_characters_count_and_verify() {
        // Trivial cochain on ℤ/2 × ℤ/2: the 4 ordinary characters.
        let g = GroupSpec::new(vec![2, 2]);
        let f = Cochain2::zero(g.clone(), 2);
        let chars = quasi_characters(&f);
        assert_eq!(chars.len(), 4);
        for c in &chars {
            for x in g.elems() {
                for y in g.elems() {
                    let lhs = c.eval_exp(&x) + c.eval_exp(&y);
                    let rhs = c.eval_exp(&g.add(&x, &y));
                    assert_eq!((lhs - rhs).rem_euclid(c.root_order as i64), 0);
                }
            }
        }
        // Asymmetric input: none.
        let om = z2_cube_triple();
        let phi = tilde_phi(&om, &vec![1, 0, 0]);
        assert!(!phi.is_symmetric());
        assert!(quasi_characters(&phi).is_empty());
        // A genuinely twisted symmetric cocycle on ℤ/2: values in μ₄ needed.
        let z2 = GroupSpec::new(vec![2]);
        let f = Cochain2::from_fn(z2.clone(), 2, |x, y| (x[0] * y[0]) as i64);
        assert!(f.is_symmetric() && f.is_two_cocycle());
        let chars = quasi_characters(&f);
        assert_eq!(chars.len(), 2);
        for c in &chars {
            // χ(1)² = F(1,1)·χ(0) = −1, so χ(1) is a primitive 4th root.
            let v = c.eval(&vec![1]);
            assert_eq!(v.unity_order(), Some(4));
        }
    }

    #[test]
    fn group_universe_is_the_expected_list() {
        let u = group_universe(16, 3);
        assert_eq!(u.len(), 29);
        assert!(u.contains(&GroupSpec::new(vec![2, 2, 4])));
        assert!(u.contains(&GroupSpec::new(vec![16])));
        assert!(!u.contains(&GroupSpec::new(vec![2, 9])));
        assert!(u.iter().all(|g| g.size() <= 16 && g.rank() <= 3));
        // Sorted and duplicate-free.
        let mut v = u.clone();
        v.sort();
        v.dedup();
        assert_eq!(u, v);
    }

    #[test]
    fn coboundaries_are_cocycles_with_trivial_symmetric_part() {
        let g = GroupSpec::new(vec![2, 2]);
        let j = Cochain2::from_fn(g.clone(), 4, |x, y| (x[0] * y[1]) as i64);
        let t = j.coboundary_table();
        let data = CocycleData::Table(t);
        assert_eq!(verify_3cocycle(&data), Ok(()));
    }
}
