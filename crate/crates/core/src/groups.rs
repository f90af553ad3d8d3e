//! Finite abelian groups presented as products of cyclic factors, with
//! element enumeration, subgroup views, squared covers, Smith normal form
//! over ℤ, and canonical solutions of linear congruence systems.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::collections::BTreeMap;

/// A finite abelian group ∏_i ℤ/m_i, keeping the caller's factor order.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct GroupSpec {
    orders: Vec<u32>,
}

/// A group element: one coordinate per factor, coordinate i in 0..m_i.
pub type Elem = Vec<u32>;

impl GroupSpec {
    /// Build from cyclic factor orders; each order must be >= 1.
    pub fn new(orders: Vec<u32>) -> Self {
        assert!(orders.iter().all(|&m| m >= 1), "factor orders must be positive");
        GroupSpec { orders }
    }

    /// The cyclic factor orders, in the caller's order.
    pub fn orders(&self) -> &[u32] {
        &self.orders
    }

    /// Number of cyclic factors.
    pub fn rank(&self) -> usize {
        self.orders.len()
    }

    /// Number of elements.
    pub fn size(&self) -> u64 {
        self.orders.iter().map(|&m| m as u64).product()
    }

    /// Exponent: the lcm of the factor orders.
    pub fn exponent(&self) -> u32 {
        self.orders.iter().fold(1u32, |acc, &m| acc.lcm(&m))
    }

    /// The identity element.
    pub fn zero(&self) -> Elem {
        vec![0; self.orders.len()]
    }

    /// Whether `e` is the identity.
    pub fn is_zero(&self, e: &Elem) -> bool {
        e.iter().all(|&x| x == 0)
    }

    /// The i-th standard generator (1 in coordinate i).
    pub fn generator(&self, i: usize) -> Elem {
        let mut e = self.zero();
        if self.orders[i] > 1 {
            e[i] = 1;
        }
        e
    }

    /// All standard generators, one per factor.
    pub fn generators(&self) -> Vec<Elem> {
        (0..self.orders.len()).map(|i| self.generator(i)).collect()
    }

    fn check(&self, e: &Elem) {
        assert_eq!(e.len(), self.orders.len(), "element rank mismatch");
        for (x, m) in e.iter().zip(&self.orders) {
            assert!(x < m, "coordinate out of range");
        }
    }

    /// Componentwise sum modulo the factor orders.
    pub fn add(&self, a: &Elem, b: &Elem) -> Elem {
        self.check(a);
        self.check(b);
        a.iter()
            .zip(b)
            .zip(&self.orders)
            .map(|((x, y), m)| (x + y) % m)
            .collect()
    }

    /// Additive inverse.
    pub fn neg(&self, a: &Elem) -> Elem {
        self.check(a);
        a.iter().zip(&self.orders).map(|(x, m)| (m - x) % m).collect()
    }

    /// Difference `a - b`.
    pub fn sub(&self, a: &Elem, b: &Elem) -> Elem {
        self.add(a, &self.neg(b))
    }

    /// Integer multiple k·a (k may be negative).
    pub fn scale(&self, k: i64, a: &Elem) -> Elem {
        self.check(a);
        a.iter()
            .zip(&self.orders)
            .map(|(x, m)| ((k.rem_euclid(*m as i64) as u64 * *x as u64) % *m as u64) as u32)
            .collect()
    }

    /// Order of an element: lcm over factors of m_i / gcd(e_i, m_i).
    pub fn elem_order(&self, e: &Elem) -> u32 {
        self.check(e);
        e.iter()
            .zip(&self.orders)
            .fold(1u32, |acc, (x, m)| acc.lcm(&(m / m.gcd(x).max(1))))
    }

    /// Enumeration index: coordinates in lexicographic order with the first
    /// coordinate most significant.
    pub fn index_of(&self, e: &Elem) -> usize {
        self.check(e);
        let mut idx = 0usize;
        for (x, m) in e.iter().zip(&self.orders) {
            idx = idx * *m as usize + *x as usize;
        }
        idx
    }

    /// The element with the given enumeration index (inverse of
    /// [`GroupSpec::index_of`]).
    pub fn elem_at(&self, mut idx: usize) -> Elem {
        let mut e = vec![0u32; self.orders.len()];
        for i in (0..self.orders.len()).rev() {
            let m = self.orders[i] as usize;
            e[i] = (idx % m) as u32;
            idx /= m;
        }
        assert_eq!(idx, 0, "index out of range");
        e
    }

    /// All elements in enumeration order.
    pub fn elems(&self) -> Vec<Elem> {
        (0..self.size() as usize).map(|i| self.elem_at(i)).collect()
    }
}

/// Smith normal form U·A·V = diag(d) with unimodular U, V and their
/// inverses, d_i ≥ 0 and d_i | d_{i+1}.
pub struct Snf {
    /// The diagonal entries.
    pub d: Vec<BigInt>,
    /// Left transform.
    pub u: Vec<Vec<BigInt>>,
    /// Inverse of the left transform.
    pub u_inv: Vec<Vec<BigInt>>,
    /// Right transform.
    pub v: Vec<Vec<BigInt>>,
    /// Inverse of the right transform.
    pub v_inv: Vec<Vec<BigInt>>,
}

fn int_identity(n: usize) -> Vec<Vec<BigInt>> {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { BigInt::one() } else { BigInt::zero() })
                .collect()
        })
        .collect()
}

/// Product of two integer matrices.
pub fn int_mat_mul(a: &[Vec<BigInt>], b: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let r = a.len();
    let inner = if r > 0 { a[0].len() } else { 0 };
    let c = if b.is_empty() { 0 } else { b[0].len() };
    assert_eq!(inner, b.len(), "inner dimensions differ");
    let mut out = vec![vec![BigInt::zero(); c]; r];
    for i in 0..r {
        for k in 0..inner {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..c {
                let t = &a[i][k] * &b[k][j];
                out[i][j] += t;
            }
        }
    }
    out
}

/// Compute the Smith normal form of an integer matrix.
pub fn smith_normal_form(a: &[Vec<BigInt>]) -> Snf {
    let r = a.len();
    let c = if r > 0 { a[0].len() } else { 0 };
    let mut m: Vec<Vec<BigInt>> = a.to_vec();
    let mut u = int_identity(r);
    let mut u_inv = int_identity(r);
    let mut v = int_identity(c);
    let mut v_inv = int_identity(c);

    let swap_rows = |m: &mut Vec<Vec<BigInt>>, u: &mut Vec<Vec<BigInt>>, ui: &mut Vec<Vec<BigInt>>, i: usize, j: usize| {
        m.swap(i, j);
        u.swap(i, j);
        for row in ui.iter_mut() {
            row.swap(i, j);
        }
    };
    let swap_cols = |m: &mut Vec<Vec<BigInt>>, v: &mut Vec<Vec<BigInt>>, vi: &mut Vec<Vec<BigInt>>, i: usize, j: usize| {
        for row in m.iter_mut() {
            row.swap(i, j);
        }
        for row in v.iter_mut() {
            row.swap(i, j);
        }
        vi.swap(i, j);
    };
    // row_i -= q * row_t  (tracked)
    let row_sub = |m: &mut Vec<Vec<BigInt>>, u: &mut Vec<Vec<BigInt>>, ui: &mut Vec<Vec<BigInt>>, i: usize, t: usize, q: &BigInt| {
        for j in 0..m[0].len() {
            let x = q * &m[t][j];
            m[i][j] -= x;
        }
        for j in 0..u[0].len() {
            let x = q * &u[t][j];
            u[i][j] -= x;
        }
        for row in ui.iter_mut() {
            let x = q * &row[i];
            row[t] += x;
        }
    };
    // col_j -= q * col_t (tracked)
    let col_sub = |m: &mut Vec<Vec<BigInt>>, v: &mut Vec<Vec<BigInt>>, vi: &mut Vec<Vec<BigInt>>, j: usize, t: usize, q: &BigInt| {
        for row in m.iter_mut() {
            let x = q * &row[t];
            row[j] -= x;
        }
        for row in v.iter_mut() {
            let x = q * &row[t];
            row[j] -= x;
        }
        for k in 0..vi[0].len() {
            let x = q * &vi[j][k];
            vi[t][k] += x;
        }
    };
    let negate_row = |m: &mut Vec<Vec<BigInt>>, u: &mut Vec<Vec<BigInt>>, ui: &mut Vec<Vec<BigInt>>, i: usize| {
        for x in m[i].iter_mut() {
            *x = -x.clone();
        }
        for x in u[i].iter_mut() {
            *x = -x.clone();
        }
        for row in ui.iter_mut() {
            row[i] = -row[i].clone();
        }
    };

    let min_rc = r.min(c);
    for t in 0..min_rc {
        'place: loop {
            // Find a nonzero entry of minimal absolute value in the
            // remaining block.
            let mut best: Option<(usize, usize)> = None;
            for i in t..r {
                for j in t..c {
                    if m[i][j].is_zero() {
                        continue;
                    }
                    match best {
                        None => best = Some((i, j)),
                        Some((bi, bj)) => {
                            if m[i][j].abs() < m[bi][bj].abs() {
                                best = Some((i, j));
                            }
                        }
                    }
                }
            }
            let Some((bi, bj)) = best else {
                break 'place; // rest of the matrix is zero
            };
            if bi != t {
                swap_rows(&mut m, &mut u, &mut u_inv, t, bi);
            }
            if bj != t {
                swap_cols(&mut m, &mut v, &mut v_inv, t, bj);
            }
            // Clear column t below and row t to the right.
            let mut dirty = false;
            for i in t + 1..r {
                if !m[i][t].is_zero() {
                    let q = m[i][t].div_floor(&m[t][t]);
                    row_sub(&mut m, &mut u, &mut u_inv, i, t, &q);
                    if !m[i][t].is_zero() {
                        dirty = true;
                    }
                }
            }
            for j in t + 1..c {
                if !m[t][j].is_zero() {
                    let q = m[t][j].div_floor(&m[t][t]);
                    col_sub(&mut m, &mut v, &mut v_inv, j, t, &q);
                    if !m[t][j].is_zero() {
                        dirty = true;
                    }
                }
            }
            if dirty {
                continue 'place;
            }
            // Enforce divisibility of the remaining block by the pivot.
            let pivot = m[t][t].clone();
            let mut fixed = true;
            'scan: for i in t + 1..r {
                for j in t + 1..c {
                    if !(&m[i][j] % &pivot).is_zero() {
                        // Fold row i into row t and restart this pivot.
                        let neg_one = BigInt::from(-1);
                        row_sub(&mut m, &mut u, &mut u_inv, t, i, &neg_one);
                        fixed = false;
                        break 'scan;
                    }
                }
            }
            if fixed {
                break 'place;
            }
        }
        if m[t][t].is_negative() {
            negate_row(&mut m, &mut u, &mut u_inv, t);
        }
    }
    let d = (0..min_rc).map(|t| m[t][t].clone()).collect();
    Snf { d, u, u_inv, v, v_inv }
}

/// Lower-triangular column Hermite normal form of a full-rank square
/// lattice: input columns generate the lattice; output is dim×dim with
/// positive diagonal and, in each row, off-diagonal entries reduced into
/// [0, diagonal).
pub fn column_hnf(mut cols: Vec<Vec<BigInt>>, dim: usize) -> Vec<Vec<BigInt>> {
    assert!(cols.iter().all(|c| c.len() == dim));
    let mut placed: Vec<Vec<BigInt>> = Vec::with_capacity(dim);
    for row in 0..dim {
        // Combine remaining columns until exactly one has a nonzero entry in
        // this row (the gcd), using column operations.
        loop {
            let mut idxs: Vec<usize> =
                (0..cols.len()).filter(|&j| !cols[j][row].is_zero()).collect();
            if idxs.len() <= 1 {
                break;
            }
            // Reduce the larger by the smaller.
            idxs.sort_by(|&a, &b| cols[a][row].abs().cmp(&cols[b][row].abs()));
            let (small, large) = (idxs[0], idxs[1]);
            let q = cols[large][row].div_floor(&cols[small][row]);
            for i in 0..dim {
                let x = &q * &cols[small][i];
                cols[large][i] -= x;
            }
        }
        let j = (0..cols.len())
            .find(|&j| !cols[j][row].is_zero())
            .expect("lattice not full rank");
        let mut pivot_col = cols.swap_remove(j);
        if pivot_col[row].is_negative() {
            for x in pivot_col.iter_mut() {
                *x = -x.clone();
            }
        }
        // Reduce earlier-placed columns' entries in this row into
        // [0, pivot).
        for p in placed.iter_mut() {
            if !p[row].is_zero() {
                let q = p[row].div_floor(&pivot_col[row]);
                if !q.is_zero() {
                    for i in 0..dim {
                        let x = &q * &pivot_col[i];
                        p[i] -= x;
                    }
                }
            }
        }
        // Zero out the remaining columns' entries in this row (they are
        // multiples of the pivot now).
        for ccol in cols.iter_mut() {
            if !ccol[row].is_zero() {
                let q = ccol[row].div_floor(&pivot_col[row]);
                for i in 0..dim {
                    let x = &q * &pivot_col[i];
                    ccol[i] -= x;
                }
            }
        }
        placed.push(pivot_col);
    }
    placed
}

/// Reduce `x` to the canonical representative modulo the lattice spanned by
/// the HNF columns: coordinate i lands in [0, h_ii).
pub fn reduce_mod_hnf(x: &mut [BigInt], hnf: &[Vec<BigInt>]) {
    for (i, col) in hnf.iter().enumerate() {
        let q = x[i].div_floor(&col[i]);
        if !q.is_zero() {
            for (xi, ci) in x.iter_mut().zip(col) {
                *xi -= &q * ci;
            }
        }
    }
}

/// Solve A·x ≡ b where row i is a congruence modulo `moduli[i]`.  Returns
/// the canonical solution (each coordinate minimal nonnegative under
/// lattice reduction in Hermite normal form), or `None` if unsolvable.
pub fn solve_linear_mod(a: &[Vec<i64>], b: &[i64], moduli: &[u32]) -> Option<Vec<i64>> {
    solve_linear_mod_full(a, b, moduli).map(|(x, _)| x)
}

/// Like [`solve_linear_mod`], but also returns a column basis (Hermite
/// normal form) of the lattice of homogeneous solutions.
pub fn solve_linear_mod_full(
    a: &[Vec<i64>],
    b: &[i64],
    moduli: &[u32],
) -> Option<(Vec<i64>, Vec<Vec<i64>>)> {
    let rows = a.len();
    assert_eq!(b.len(), rows);
    assert_eq!(moduli.len(), rows);
    let cols = a.first().map_or(0, |r| r.len());
    assert!(a.iter().all(|r| r.len() == cols), "ragged coefficient matrix");
    assert!(moduli.iter().all(|&m| m >= 1));
    let l: i64 = moduli.iter().fold(1i64, |acc, &m| acc.lcm(&(m as i64)));

    // Uniformize all rows to modulus L, then append L·I to absorb the
    // congruences: solve [A' | L·I]·(x, w) = b' over ℤ.
    let total = cols + rows;
    let mut big: Vec<Vec<BigInt>> = Vec::with_capacity(rows);
    let mut rhs: Vec<BigInt> = Vec::with_capacity(rows);
    for i in 0..rows {
        let scale = l / moduli[i] as i64;
        let mut row: Vec<BigInt> = a[i].iter().map(|&x| BigInt::from(x * scale)).collect();
        for j in 0..rows {
            row.push(if j == i { BigInt::from(l) } else { BigInt::zero() });
        }
        big.push(row);
        rhs.push(BigInt::from(b[i] * scale));
    }

    let snf = smith_normal_form(&big);
    // c = U·b'
    let c: Vec<BigInt> = (0..rows)
        .map(|i| {
            let mut acc = BigInt::zero();
            for (j, bj) in rhs.iter().enumerate() {
                acc += &snf.u[i][j] * bj;
            }
            acc
        })
        .collect();
    let min_rc = rows.min(total);
    let mut z = vec![BigInt::zero(); total];
    for i in 0..rows {
        if i < min_rc && !snf.d[i].is_zero() {
            let (q, r) = c[i].div_rem(&snf.d[i]);
            if !r.is_zero() {
                return None;
            }
            z[i] = q;
        } else if !c[i].is_zero() {
            return None;
        }
    }
    // y = V·z, particular solution; keep the first `cols` coordinates.
    let mut x: Vec<BigInt> = (0..cols)
        .map(|i| {
            let mut acc = BigInt::zero();
            for (j, zj) in z.iter().enumerate() {
                acc += &snf.v[i][j] * zj;
            }
            acc
        })
        .collect();

    // Lattice of homogeneous solutions: x-projections of kernel basis
    // columns (V columns whose diagonal entry is zero or out of range).
    let mut lattice: Vec<Vec<BigInt>> = Vec::new();
    for j in 0..total {
        let free = j >= min_rc || snf.d[j].is_zero();
        if free {
            lattice.push((0..cols).map(|i| snf.v[i][j].clone()).collect());
        }
    }
    if cols == 0 {
        return Some((vec![], vec![]));
    }
    let hnf = column_hnf(lattice, cols);
    reduce_mod_hnf(&mut x, &hnf);
    let xi: Vec<i64> = x
        .iter()
        .map(|v| v.to_i64().expect("canonical solution fits in i64"))
        .collect();
    let hnf_i: Vec<Vec<i64>> = hnf
        .iter()
        .map(|col| col.iter().map(|v| v.to_i64().expect("lattice entry fits in i64")).collect())
        .collect();
    Some((xi, hnf_i))
}

/// A subgroup of a parent group, with an abstract cyclic-factor
/// presentation and translation maps in both directions.
pub struct SubgroupView {
    /// The ambient group.
    pub parent: GroupSpec,
    /// The generators the subgroup was built from.
    pub generators: Vec<Elem>,
    /// Members sorted by parent enumeration index.
    pub elements: Vec<Elem>,
    /// Presentation of the subgroup as a product of cyclic factors.
    pub abstract_spec: GroupSpec,
    /// Image of each abstract generator inside the parent.
    pub abstract_gens_in_parent: Vec<Elem>,
    parent_index_to_abstract: BTreeMap<usize, Elem>,
}

impl SubgroupView {
    /// Number of elements in the subgroup.
    pub fn size(&self) -> u64 {
        self.elements.len() as u64
    }

    /// Whether a parent element belongs to the subgroup.
    pub fn contains(&self, e: &Elem) -> bool {
        self.parent_index_to_abstract.contains_key(&self.parent.index_of(e))
    }

    /// Abstract coordinates of a member (panics for non-members).
    pub fn to_abstract(&self, e: &Elem) -> Elem {
        self.parent_index_to_abstract
            .get(&self.parent.index_of(e))
            .cloned()
            .expect("element is not in the subgroup")
    }

    /// Parent element corresponding to abstract coordinates.
    pub fn from_abstract(&self, a: &Elem) -> Elem {
        let mut acc = self.parent.zero();
        for (i, &ai) in a.iter().enumerate() {
            let part = self.parent.scale(ai as i64, &self.abstract_gens_in_parent[i]);
            acc = self.parent.add(&acc, &part);
        }
        acc
    }
}

/// The subgroup of `parent` generated by `gens`.
pub fn subgroup_generated(parent: &GroupSpec, gens: &[Elem]) -> SubgroupView {
    // Closure under addition (breadth-first from 0).
    let mut seen: BTreeMap<usize, Elem> = BTreeMap::new();
    let zero = parent.zero();
    seen.insert(parent.index_of(&zero), zero.clone());
    let mut frontier = vec![zero];
    while let Some(cur) = frontier.pop() {
        for g in gens {
            let nxt = parent.add(&cur, g);
            let idx = parent.index_of(&nxt);
            if !seen.contains_key(&idx) {
                seen.insert(idx, nxt.clone());
                frontier.push(nxt);
            }
        }
    }
    let elements: Vec<Elem> = seen.values().cloned().collect();

    // Relation lattice K ⊂ ℤ^k for the generating map ℤ^k → parent:
    // x-projection of the kernel of [M | diag(orders)], M's columns the
    // generators.
    let k = gens.len();
    let pr = parent.rank();
    let abstract_spec;
    let abstract_gens_in_parent: Vec<Elem>;
    if k == 0 {
        abstract_spec = GroupSpec::new(vec![]);
        abstract_gens_in_parent = vec![];
    } else {
        let mut m: Vec<Vec<BigInt>> = vec![vec![BigInt::zero(); k + pr]; pr];
        for (j, g) in gens.iter().enumerate() {
            for i in 0..pr {
                m[i][j] = BigInt::from(g[i]);
            }
        }
        for i in 0..pr {
            m[i][k + i] = BigInt::from(parent.orders()[i]);
        }
        let snf = smith_normal_form(&m);
        let min_rc = pr.min(k + pr);
        let mut rel_basis: Vec<Vec<BigInt>> = Vec::new();
        for j in 0..k + pr {
            let free = j >= min_rc || snf.d[j].is_zero();
            if free {
                rel_basis.push((0..k).map(|i| snf.v[i][j].clone()).collect());
            }
        }
        // K has full rank k (it contains exponent·ℤ^k).  Put a basis into
        // the columns of a k×k matrix and take its Smith form.
        let hnf = column_hnf(rel_basis, k);
        let bmat: Vec<Vec<BigInt>> = (0..k)
            .map(|i| (0..k).map(|j| hnf[j][i].clone()).collect())
            .collect();
        let s2 = smith_normal_form(&bmat);
        let mut orders: Vec<u32> = Vec::new();
        let mut gens_out: Vec<Elem> = Vec::new();
        for i in 0..k {
            let d = s2.d[i].to_u32().expect("cyclic factor order fits in u32");
            if d <= 1 {
                continue;
            }
            orders.push(d);
            // Abstract generator i corresponds to column i of U⁻¹ in the
            // original ℤ^k coordinates; push it into the parent.
            let mut img = parent.zero();
            for j in 0..k {
                let coef = s2.u_inv[j][i]
                    .mod_floor(&BigInt::from(parent.exponent()))
                    .to_i64()
                    .unwrap();
                img = parent.add(&img, &parent.scale(coef, &gens[j]));
            }
            gens_out.push(img);
        }
        abstract_spec = GroupSpec::new(orders);
        abstract_gens_in_parent = gens_out;
    }

    // Tabulate abstract → parent over all abstract tuples and invert.
    let mut parent_index_to_abstract: BTreeMap<usize, Elem> = BTreeMap::new();
    for a in abstract_spec.elems() {
        let mut acc = parent.zero();
        for (i, &ai) in a.iter().enumerate() {
            let part = parent.scale(ai as i64, &abstract_gens_in_parent[i]);
            acc = parent.add(&acc, &part);
        }
        let idx = parent.index_of(&acc);
        let prev = parent_index_to_abstract.insert(idx, a);
        assert!(prev.is_none(), "abstract presentation is not faithful");
    }
    assert_eq!(
        parent_index_to_abstract.len(),
        elements.len(),
        "abstract presentation has the wrong size"
    );

    SubgroupView {
        parent: parent.clone(),
        generators: gens.to_vec(),
        elements,
        abstract_spec,
        abstract_gens_in_parent,
        parent_index_to_abstract,
    }
}

/// The squared cover of ∏ ℤ/m_i: the group ∏ ℤ/m_i² with the coordinatewise
/// reduction map onto the base and the in-range section.
pub struct SquaredCover {
    /// The base group.
    pub base: GroupSpec,
    /// The cover: each cyclic factor order squared.
    pub cover: GroupSpec,
}

impl SquaredCover {
    /// Build the squared cover of a group.
    pub fn new(base: &GroupSpec) -> Self {
        let cover = GroupSpec::new(base.orders().iter().map(|&m| m * m).collect());
        SquaredCover { base: base.clone(), cover }
    }

    /// Reduction homomorphism cover → base.
    pub fn project(&self, e: &Elem) -> Elem {
        e.iter().zip(self.base.orders()).map(|(x, m)| x % m).collect()
    }

    /// Set-theoretic section base → cover picking the in-range
    /// representative (not a homomorphism).
    pub fn section(&self, e: &Elem) -> Elem {
        e.clone()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumeration_round_trips_and_orders() {
        let g = GroupSpec::new(vec![2, 3, 4]);
        assert_eq!(g.size(), 24);
        assert_eq!(g.exponent(), 12);
        for i in 0..24 {
            assert_eq!(g.index_of(&g.elem_at(i)), i);
        }
        // First coordinate most significant.
        assert_eq!(g.elem_at(0), vec![0, 0, 0]);
        assert_eq!(g.elem_at(1), vec![0, 0, 1]);
        assert_eq!(g.elem_at(12), vec![1, 0, 0]);
        assert_eq!(g.elem_order(&vec![1, 1, 0]), 6);
        assert_eq!(g.elem_order(&vec![0, 0, 2]), 2);
        assert_eq!(g.elem_order(&g.zero()), 1);
        assert_eq!(GroupSpec::new(vec![6]).elem_order(&vec![2]), 3);
    }

    #[test]
    fn group_ops_are_consistent() {
        let g = GroupSpec::new(vec![4, 6]);
        let a = vec![3, 5];
        let b = vec![2, 4];
        assert_eq!(g.add(&a, &b), vec![1, 3]);
        assert_eq!(g.add(&a, &g.neg(&a)), g.zero());
        assert_eq!(g.sub(&a, &b), g.add(&a, &g.neg(&b)));
        assert_eq!(g.scale(3, &a), g.add(&a, &g.add(&a, &a)));
        assert_eq!(g.scale(-1, &a), g.neg(&a));
    }

    fn check_snf(a: &[Vec<BigInt>]) {
        let r = a.len();
        let c = if r > 0 { a[0].len() } else { 0 };
        let snf = smith_normal_form(a);
        // U·A·V is diagonal d.
        let ua = int_mat_mul(&snf.u, a);
        let uav = int_mat_mul(&ua, &snf.v);
        for i in 0..r {
            for j in 0..c {
                let want = if i == j && i < snf.d.len() { snf.d[i].clone() } else { BigInt::zero() };
                assert_eq!(uav[i][j], want, "diagonal mismatch at ({},{})", i, j);
            }
        }
        // Inverses really invert.
        let id_r = int_mat_mul(&snf.u, &snf.u_inv);
        let id_c = int_mat_mul(&snf.v, &snf.v_inv);
        for i in 0..r {
            for j in 0..r {
                let want = if i == j { BigInt::one() } else { BigInt::zero() };
                assert_eq!(id_r[i][j], want);
            }
        }
        for i in 0..c {
            for j in 0..c {
                let want = if i == j { BigInt::one() } else { BigInt::zero() };
                assert_eq!(id_c[i][j], want);
            }
        }
        // Divisibility chain.
        for w in snf.d.windows(2) {
            if !w[1].is_zero() {
                assert!(!w[0].is_zero());
            }
            if !w[0].is_zero() {
                assert!((&w[1] % &w[0]).is_zero(), "divisibility violated");
            }
        }
    }

    #[test]
    fn smith_normal_form_has_all_invariants() {
        let cases: Vec<Vec<Vec<i64>>> = vec![
            vec![vec![2, 4], vec![6, 8]],
            vec![vec![1, 0], vec![0, 1]],
            vec![vec![0, 0], vec![0, 0]],
            vec![vec![2, 0, 0], vec![0, 3, 0]],
            vec![vec![6, 10], vec![15, 4], vec![9, 9]],
            vec![vec![-3, 7, 2], vec![5, -1, 0], vec![4, 4, 4]],
            vec![vec![12]],
            vec![vec![2, 3, 5, 7]],
        ];
        for case in cases {
            let a: Vec<Vec<BigInt>> = case
                .iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect();
            check_snf(&a);
        }
        // A deterministic sweep of tiny matrices.
        for seed in 0..200i64 {
            let vals: Vec<i64> = (0..6).map(|i| ((seed * 31 + i * 17) % 7) - 3).collect();
            let a: Vec<Vec<BigInt>> = vec![
                vals[0..3].iter().map(|&x| BigInt::from(x)).collect(),
                vals[3..6].iter().map(|&x| BigInt::from(x)).collect(),
            ];
            check_snf(&a);
        }
    }

    #[test]
    fn linear_congruences_canonical_solution() {
        // Documented worked example: x1+x2 ≡ 1, 2·x2 ≡ 2 (mod 4) → (0, 1).
        let sol = solve_linear_mod(
            &[vec![1, 1], vec![0, 2]],
            &[1, 2],
            &[4, 4],
        )
        .unwrap();
        assert_eq!(sol, vec![0, 1]);
        // Unsolvable: 2·x ≡ 1 (mod 4).
        assert!(solve_linear_mod(&[vec![2]], &[1], &[4]).is_none());
        // Mixed moduli.
        let sol = solve_linear_mod(&[vec![1, 0], vec![0, 1]], &[1, 2], &[2, 3]).unwrap();
        assert_eq!(sol, vec![1, 2]);
        // Verify the canonical answer actually satisfies the congruences,
        // over a sweep.
        for t in 0..60i64 {
            let a = vec![vec![t % 5, (t / 5) % 5], vec![(t / 2) % 5, 1]];
            let b = vec![t % 6, (t + 1) % 6];
            if let Some(x) = solve_linear_mod(&a, &b, &[6, 6]) {
                for (row, (ai, bi)) in a.iter().zip(b.iter()).enumerate() {
                    let lhs: i64 = ai.iter().zip(&x).map(|(c, xi)| c * xi).sum();
                    assert_eq!(lhs.rem_euclid(6), bi.rem_euclid(6), "row {} of case {}", row, t);
                }
                // Canonical coordinates are nonnegative.
                assert!(x.iter().all(|&v| v >= 0));
            }
        }
    }

    #[test]
    fn homogeneous_lattice_spans_all_solutions() {
        let a = vec![vec![1, 1], vec![0, 2]];
        let b = vec![1, 2];
        let (x0, lat) = solve_linear_mod_full(&a, &b, &[4, 4]).unwrap();
        assert_eq!(x0, vec![0, 1]);
        // Every lattice column is a homogeneous solution.
        for col in &lat {
            for (ai, &mi) in a.iter().zip(&[4u32, 4]) {
                let lhs: i64 = ai.iter().zip(col).map(|(c, xi)| c * xi).sum();
                assert_eq!(lhs.rem_euclid(mi as i64), 0);
            }
        }
        // The other solution class (2,3) reduces to the canonical one.
        let mut other: Vec<BigInt> = vec![BigInt::from(2), BigInt::from(3)];
        let hnf: Vec<Vec<BigInt>> = lat
            .iter()
            .map(|c| c.iter().map(|&v| BigInt::from(v)).collect())
            .collect();
        reduce_mod_hnf(&mut other, &hnf);
        let reduced: Vec<i64> = other.iter().map(|v| v.to_i64().unwrap()).collect();
        assert_eq!(reduced, x0);
    }

    #[test]
    fn subgroups_have_faithful_presentations() {
        // ⟨2⟩ in ℤ/6 is cyclic of order 3.
        let g = GroupSpec::new(vec![6]);
        let h = subgroup_generated(&g, &[vec![2]]);
        assert_eq!(h.size(), 3);
        assert_eq!(h.abstract_spec.orders(), &[3]);
        assert!(h.contains(&vec![4]));
        assert!(!h.contains(&vec![3]));
        // Diagonal of ℤ/2 × ℤ/4 is cyclic of order 4.
        let g = GroupSpec::new(vec![2, 4]);
        let h = subgroup_generated(&g, &[vec![1, 1]]);
        assert_eq!(h.size(), 4);
        assert_eq!(h.abstract_spec.orders(), &[4]);
        // {e1+e2, e3} in ℤ/2³ is a Klein four group.
        let g = GroupSpec::new(vec![2, 2, 2]);
        let h = subgroup_generated(&g, &[vec![1, 1, 0], vec![0, 0, 1]]);
        assert_eq!(h.size(), 4);
        assert_eq!(h.abstract_spec.orders(), &[2, 2]);
        // Round trips.
        for e in &h.elements {
            assert_eq!(&h.from_abstract(&h.to_abstract(e)), e);
        }
        // Trivial subgroup.
        let t = subgroup_generated(&g, &[]);
        assert_eq!(t.size(), 1);
        assert_eq!(t.abstract_spec.rank(), 0);
        // Full group from redundant generators.
        let f = subgroup_generated(&g, &[vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1], vec![1, 1, 1]]);
        assert_eq!(f.size(), 8);
    }

    #[test]
    fn subgroup_translation_is_homomorphic() {
        let g = GroupSpec::new(vec![4, 6]);
        let h = subgroup_generated(&g, &[vec![2, 0], vec![0, 2]]);
        assert_eq!(h.size(), 6);
        let spec = &h.abstract_spec;
        for a in spec.elems() {
            for b in spec.elems() {
                let lhs = h.from_abstract(&spec.add(&a, &b));
                let rhs = g.add(&h.from_abstract(&a), &h.from_abstract(&b));
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn squared_cover_projects_and_sections() {
        let base = GroupSpec::new(vec![2, 3]);
        let cov = SquaredCover::new(&base);
        assert_eq!(cov.cover.orders(), &[4, 9]);
        for e in base.elems() {
            assert_eq!(cov.project(&cov.section(&e)), e);
        }
        // Projection is a homomorphism.
        for a in cov.cover.elems() {
            for b in cov.cover.elems() {
                assert_eq!(
                    cov.project(&cov.cover.add(&a, &b)),
                    base.add(&cov.project(&a), &cov.project(&b))
                );
            }
        }
    }
}
