//! Exact arithmetic in cyclotomic fields ℚ(ζ_N).
//!
//! A [`CycScalar`] is an element of `ℚ[x]/(Φ_N(x))` where Φ_N is the N-th
//! cyclotomic polynomial, stored as an integer coefficient vector of length
//! φ(N) over a common positive denominator.  Because Φ_N is irreducible the
//! quotient is a field, so ranks and inverses downstream are well defined.
//! The root order N is fixed per computation (callers unify contexts via
//! [`CycScalar::embed`] into the lcm of all orders that appear); no floating
//! point is used anywhere.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use once_cell::sync::Lazy;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::{Arc, RwLock};

/// Coefficients of the N-th cyclotomic polynomial, lowest degree first,
/// monic, length φ(N)+1.  Computed by exact division of x^N − 1 by Φ_d for
/// all proper divisors d of N.
pub fn cyclo_poly(n: u32) -> Vec<BigInt> {
    assert!(n >= 1, "cyclotomic index must be positive");
    let mut cache: BTreeMap<u32, Vec<BigInt>> = BTreeMap::new();
    cyclo_poly_cached(n, &mut cache)
}

fn cyclo_poly_cached(n: u32, cache: &mut BTreeMap<u32, Vec<BigInt>>) -> Vec<BigInt> {
    if let Some(p) = cache.get(&n) {
        return p.clone();
    }
    // x^n − 1
    let mut num = vec![BigInt::zero(); n as usize + 1];
    num[0] = BigInt::from(-1);
    num[n as usize] = BigInt::one();
    for d in 1..n {
        if n % d == 0 {
            let phi_d = cyclo_poly_cached(d, cache);
            num = poly_exact_div(&num, &phi_d);
        }
    }
    cache.insert(n, num.clone());
    num
}

/// Exact division of integer polynomials (panics if the division is inexact;
/// it never is for cyclotomic factors).  Coefficients lowest-first.
fn poly_exact_div(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let dn = num.len() - 1;
    let dd = den.len() - 1;
    assert!(dn >= dd);
    assert!(den[dd].is_one(), "divisor must be monic");
    let mut rem = num.to_vec();
    let mut quot = vec![BigInt::zero(); dn - dd + 1];
    for k in (0..=(dn - dd)).rev() {
        let c = rem[k + dd].clone();
        if !c.is_zero() {
            for i in 0..=dd {
                rem[k + i] -= &c * &den[i];
            }
        }
        quot[k] = c;
    }
    assert!(rem.iter().all(|c| c.is_zero()), "inexact polynomial division");
    quot
}

/// Euler totient, by trial division (orders here are tiny).
pub fn euler_phi(n: u32) -> u32 {
    let mut m = n;
    let mut result = n;
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            while m % p == 0 {
                m /= p;
            }
            result = result / p * (p - 1);
        }
        p += 1;
    }
    if m > 1 {
        result = result / m * (m - 1);
    }
    result
}

/// Shared per-order data: the modulus Φ_N, reduction rows for degrees
/// φ..2φ−2, and the reduced power basis images of ζ^k for 0 ≤ k < N.
struct CycCtx {
    phi: usize,
    /// x^(phi+i) reduced mod Φ_N, for i in 0..phi−1 (each row length phi).
    red_rows: Vec<Vec<BigInt>>,
    /// ζ^k in the power basis, for k in 0..n (each row length phi).
    zeta_rows: Vec<Vec<BigInt>>,
}

static CTX_REGISTRY: Lazy<RwLock<BTreeMap<u32, Arc<CycCtx>>>> =
    Lazy::new(|| RwLock::new(BTreeMap::new()));

fn ctx(n: u32) -> Arc<CycCtx> {
    if let Some(c) = CTX_REGISTRY.read().unwrap().get(&n) {
        return c.clone();
    }
    let poly = cyclo_poly(n);
    let phi = poly.len() - 1;
    // Reduction rows: x^phi = −(low part); then shift-and-reduce repeatedly.
    let mut red_rows: Vec<Vec<BigInt>> = Vec::with_capacity(phi.max(1));
    let base: Vec<BigInt> = poly[..phi].iter().map(|c| -c).collect();
    if phi > 0 {
        red_rows.push(base);
        for _ in 1..phi {
            let prev = red_rows.last().unwrap().clone();
            let mut next = vec![BigInt::zero(); phi];
            // multiply by x: shift, then fold the overflow coefficient.
            for (i, c) in prev.iter().enumerate() {
                if i + 1 < phi {
                    next[i + 1] += c;
                } else {
                    let top = red_rows[0].clone();
                    for (j, t) in top.iter().enumerate() {
                        next[j] += c * t;
                    }
                }
            }
            red_rows.push(next);
        }
    }
    // Powers of zeta.
    let mut zeta_rows: Vec<Vec<BigInt>> = Vec::with_capacity(n as usize);
    let mut cur = vec![BigInt::zero(); phi];
    cur[0] = BigInt::one();
    for _ in 0..n {
        zeta_rows.push(cur.clone());
        // multiply by x and reduce.
        let mut next = vec![BigInt::zero(); phi];
        for (i, c) in cur.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if i + 1 < phi {
                next[i + 1] += c;
            } else {
                for (j, t) in red_rows[0].iter().enumerate() {
                    next[j] += c * t;
                }
            }
        }
        cur = next;
    }
    let made = Arc::new(CycCtx { phi, red_rows, zeta_rows });
    CTX_REGISTRY
        .write()
        .unwrap()
        .entry(n)
        .or_insert_with(|| made.clone())
        .clone()
}

/// An exact element of ℚ(ζ_N): integer numerator coordinates in the power
/// basis of `ℚ[x]/(Φ_N)` over a positive common denominator, kept in lowest
/// terms (content coprime to denominator; zero is all-zero over 1).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycScalar {
    n: u32,
    num: Vec<BigInt>,
    den: BigInt,
}

impl CycScalar {
    /// The fixed root order N of the ambient field ℚ(ζ_N).
    pub fn root_order(&self) -> u32 {
        self.n
    }

    /// Power-basis coordinates as (numerator, denominator) pairs in lowest
    /// common-denominator form.
    pub fn coeffs(&self) -> (&[BigInt], &BigInt) {
        (&self.num, &self.den)
    }

    fn canonical(mut self) -> Self {
        if self.num.iter().all(|c| c.is_zero()) {
            self.den = BigInt::one();
            return self;
        }
        if self.den.is_negative() {
            self.den = -self.den;
            for c in &mut self.num {
                *c = -c.clone();
            }
        }
        let mut g = self.den.clone();
        for c in &self.num {
            if !c.is_zero() {
                g = g.gcd(c);
            }
            if g.is_one() {
                break;
            }
        }
        if !g.is_one() {
            self.den /= &g;
            for c in &mut self.num {
                *c /= &g;
            }
        }
        self
    }

    /// The zero of ℚ(ζ_n).
    pub fn zero(n: u32) -> Self {
        let c = ctx(n);
        CycScalar { n, num: vec![BigInt::zero(); c.phi], den: BigInt::one() }
    }

    /// The one of ℚ(ζ_n).
    pub fn one(n: u32) -> Self {
        Self::from_int(n, 1)
    }

    /// The integer `v` as an element of ℚ(ζ_n).
    pub fn from_int(n: u32, v: i64) -> Self {
        let c = ctx(n);
        let mut num = vec![BigInt::zero(); c.phi];
        num[0] = BigInt::from(v);
        CycScalar { n, num, den: BigInt::one() }
    }

    /// The rational `p/q` as an element of ℚ(ζ_n).  Panics if `q` is zero.
    pub fn from_ratio(n: u32, p: BigInt, q: BigInt) -> Self {
        assert!(!q.is_zero(), "zero denominator");
        let c = ctx(n);
        let mut num = vec![BigInt::zero(); c.phi];
        num[0] = p;
        CycScalar { n, num, den: q }.canonical()
    }

    /// Construct from raw power-basis coordinates (numerators over a common
    /// denominator).
    pub fn from_coeffs(n: u32, num: Vec<BigInt>, den: BigInt) -> Self {
        let c = ctx(n);
        assert_eq!(num.len(), c.phi, "coefficient vector must have length phi(N)");
        assert!(!den.is_zero(), "zero denominator");
        CycScalar { n, num, den }.canonical()
    }

    /// ζ_N^k, the distinguished primitive N-th root raised to k (k may be
    /// negative).
    pub fn root_of_unity(n: u32, k: i64) -> Self {
        let c = ctx(n);
        let kk = k.rem_euclid(n as i64) as usize;
        CycScalar { n, num: c.zeta_rows[kk].clone(), den: BigInt::one() }
    }

    /// Whether this element is zero.
    pub fn is_zero(&self) -> bool {
        self.num.iter().all(|c| c.is_zero())
    }

    /// Whether this element is one.
    pub fn is_one(&self) -> bool {
        self.den.is_one()
            && self.num[0].is_one()
            && self.num[1..].iter().all(|c| c.is_zero())
    }

    fn assert_same_field(&self, other: &Self) {
        assert_eq!(
            self.n, other.n,
            "cyclotomic orders differ ({} vs {}); embed into a common field first",
            self.n, other.n
        );
    }

    /// Sum inside a common field; panics if the root orders differ.
    pub fn add(&self, other: &Self) -> Self {
        self.assert_same_field(other);
        let den = &self.den * &other.den;
        let num = self
            .num
            .iter()
            .zip(&other.num)
            .map(|(a, b)| a * &other.den + b * &self.den)
            .collect();
        CycScalar { n: self.n, num, den }.canonical()
    }

    /// Difference inside a common field; panics if the root orders differ.
    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    /// Additive inverse.
    pub fn neg(&self) -> Self {
        CycScalar {
            n: self.n,
            num: self.num.iter().map(|c| -c).collect(),
            den: self.den.clone(),
        }
    }

    /// Product inside a common field; panics if the root orders differ.
    pub fn mul(&self, other: &Self) -> Self {
        self.assert_same_field(other);
        let c = ctx(self.n);
        let phi = c.phi;
        let mut conv = vec![BigInt::zero(); 2 * phi.max(1) - 1];
        for (i, a) in self.num.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.num.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                conv[i + j] += a * b;
            }
        }
        let mut num = conv[..phi].to_vec();
        for (i, coef) in conv[phi..].iter().enumerate() {
            if coef.is_zero() {
                continue;
            }
            for (j, r) in c.red_rows[i].iter().enumerate() {
                num[j] += coef * r;
            }
        }
        CycScalar { n: self.n, num, den: &self.den * &other.den }.canonical()
    }

    /// Multiplicative inverse; `None` for zero.  Extended Euclid against the
    /// (irreducible) modulus over ℚ.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let modulus = cyclo_poly(self.n);
        // Work with rational polynomials (num vector, common den).
        let m: RatPoly = RatPoly::from_ints(&modulus);
        let a = RatPoly { num: self.num.clone(), den: self.den.clone() }.trim();
        let (mut r0, mut r1) = (m, a);
        let (mut t0, mut t1) = (RatPoly::zero(), RatPoly::constant(BigInt::one()));
        while r1.degree() > 0 {
            let (q, r) = r0.div_rem(&r1);
            let t2 = t0.sub(&q.mul(&t1));
            r0 = r1;
            r1 = r;
            t0 = t1;
            t1 = t2;
        }
        assert!(
            !r1.is_zero(),
            "nonzero element had a nontrivial gcd with the irreducible modulus"
        );
        // r1 is a nonzero constant c; inverse = t1 / c.
        let c_num = r1.num[0].clone();
        let c_den = r1.den.clone();
        let phi = ctx(self.n).phi;
        let mut num = t1.num;
        num.resize(phi, BigInt::zero());
        let num: Vec<BigInt> = num.into_iter().map(|x| x * &c_den).collect();
        let den = &t1.den * &c_num;
        Some(CycScalar { n: self.n, num, den }.canonical())
    }

    /// Quotient; panics on division by zero or mismatched root orders.
    pub fn div(&self, other: &Self) -> Self {
        self.mul(&other.inv().expect("division by zero"))
    }

    /// Integer power (negative exponents via the inverse).
    pub fn pow(&self, k: i64) -> Self {
        if k < 0 {
            return self.inv().expect("zero has no negative powers").pow(-k);
        }
        let mut result = Self::one(self.n);
        let mut base = self.clone();
        let mut e = k as u64;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        result
    }

    /// Embed into ℚ(ζ_m) for a multiple m of the current order, via
    /// ζ_N ↦ ζ_m^(m/N).
    pub fn embed(&self, m: u32) -> Self {
        assert!(m % self.n == 0, "target order must be a multiple of the current order");
        if m == self.n {
            return self.clone();
        }
        let step = (m / self.n) as i64;
        let tgt = ctx(m);
        let mut num = vec![BigInt::zero(); tgt.phi];
        for (i, a) in self.num.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let row = &tgt.zeta_rows[((i as i64 * step) % m as i64) as usize];
            for (j, r) in row.iter().enumerate() {
                num[j] += a * r;
            }
        }
        CycScalar { n: m, num, den: self.den.clone() }.canonical()
    }

    /// Multiplicative order if this is a root of unity, else `None`
    /// (including for zero).  Roots of unity in ℚ(ζ_N) have order dividing
    /// N (N even) or 2N (N odd), so the search is finite.
    pub fn unity_order(&self) -> Option<u32> {
        if self.is_zero() {
            return None;
        }
        let bound = if self.n % 2 == 0 { self.n } else { 2 * self.n };
        let mut t = self.clone();
        for k in 1..=bound {
            if t.is_one() {
                return Some(k);
            }
            t = t.mul(self);
        }
        None
    }

    /// If this scalar equals ζ_N^k for some k, return that exponent
    /// (0 ≤ k < N).
    pub fn as_root_power(&self) -> Option<u32> {
        if !self.den.is_one() {
            return None;
        }
        let c = ctx(self.n);
        (0..self.n).find(|&k| self.num == c.zeta_rows[k as usize])
    }
}

/// Canonical primitive form of ζ_order^exp: the pair (d, e) with d minimal
/// such that the value equals ζ_d^e, 0 ≤ e < d, gcd(e, d) = 1 or e = 0.
pub fn reduce_root_power(order: u32, exp: i64) -> (u32, u32) {
    let e = exp.rem_euclid(order as i64) as u32;
    if e == 0 {
        return (1, 0);
    }
    let g = e.gcd(&order);
    (order / g, e / g)
}

impl fmt::Debug for CycScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for CycScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(k) = self.as_root_power() {
            let (d, e) = reduce_root_power(self.n, k as i64);
            return match (d, e) {
                (1, _) => write!(f, "1"),
                (2, _) => write!(f, "-1"),
                (_, 1) => write!(f, "zeta{}", d),
                _ => write!(f, "zeta{}^{}", d, e),
            };
        }
        // General element: polynomial in zeta with rational coefficients.
        let mut first = true;
        for (i, c) in self.num.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if self.den.is_one() {
                write!(f, "{}", c)?;
            } else {
                write!(f, "{}/{}", c, self.den)?;
            }
            if i > 0 {
                write!(f, "*zeta{}^{}", self.n, i)?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Rational-coefficient polynomial used only by the inverse computation:
/// integer numerators over one common denominator, highest terms trimmed.
struct RatPoly {
    num: Vec<BigInt>,
    den: BigInt,
}

impl RatPoly {
    fn zero() -> Self {
        RatPoly { num: vec![], den: BigInt::one() }
    }

    fn constant(c: BigInt) -> Self {
        RatPoly { num: vec![c], den: BigInt::one() }.trim()
    }

    fn from_ints(v: &[BigInt]) -> Self {
        RatPoly { num: v.to_vec(), den: BigInt::one() }.trim()
    }

    fn trim(mut self) -> Self {
        while self.num.last().map_or(false, |c| c.is_zero()) {
            self.num.pop();
        }
        if self.num.is_empty() {
            self.den = BigInt::one();
        }
        self
    }

    fn is_zero(&self) -> bool {
        self.num.is_empty()
    }

    fn degree(&self) -> isize {
        self.num.len() as isize - 1
    }

    fn sub(&self, other: &Self) -> Self {
        let len = self.num.len().max(other.num.len());
        let mut num = vec![BigInt::zero(); len];
        for (i, c) in self.num.iter().enumerate() {
            num[i] += c * &other.den;
        }
        for (i, c) in other.num.iter().enumerate() {
            num[i] -= c * &self.den;
        }
        RatPoly { num, den: &self.den * &other.den }.trim().reduce()
    }

    fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return RatPoly::zero();
        }
        let mut num = vec![BigInt::zero(); self.num.len() + other.num.len() - 1];
        for (i, a) in self.num.iter().enumerate() {
            for (j, b) in other.num.iter().enumerate() {
                num[i + j] += a * b;
            }
        }
        RatPoly { num, den: &self.den * &other.den }.trim().reduce()
    }

    /// Polynomial division over ℚ: returns (quotient, remainder).
    fn div_rem(&self, other: &Self) -> (Self, Self) {
        assert!(!other.is_zero());
        let mut rem_num: Vec<BigInt> = self.num.clone();
        let mut rem_den = self.den.clone();
        let d = other.num.len() - 1;
        let lead_num = other.num[d].clone();
        let lead_den = other.den.clone();
        if rem_num.len() <= d {
            return (RatPoly::zero(), RatPoly { num: rem_num, den: rem_den }.trim().reduce());
        }
        let qlen = rem_num.len() - d;
        let mut q_num = vec![BigInt::zero(); qlen];
        let mut q_den = BigInt::one();
        for k in (0..qlen).rev() {
            let c = rem_num[k + d].clone();
            if c.is_zero() {
                continue;
            }
            // coefficient = (c/rem_den) / (lead_num/lead_den)
            //             = (c*lead_den) / (rem_den*lead_num)
            // Scale everything onto a common denominator.
            let cn = &c * &lead_den;
            let cd = &rem_den * &lead_num;
            // q += (cn/cd) x^k
            for v in q_num.iter_mut() {
                *v = &*v * &cd;
            }
            q_num[k] += &cn * &q_den;
            q_den *= &cd;
            // rem -= (cn/cd) x^k * other
            for v in rem_num.iter_mut() {
                *v = &*v * &cd * &other.den;
            }
            let scale = &rem_den * &cn;
            for (i, oc) in other.num.iter().enumerate() {
                rem_num[k + i] -= &scale * oc;
            }
            rem_den = &rem_den * &cd * &other.den;
        }
        let q = RatPoly { num: q_num, den: q_den }.trim().reduce();
        let mut r = RatPoly { num: rem_num, den: rem_den }.trim().reduce();
        if r.degree() >= other.degree() && !r.is_zero() {
            // Remainder degree must drop; the top coefficients cancelled.
            r = r.trim();
        }
        (q, r)
    }

    fn reduce(mut self) -> Self {
        if self.num.is_empty() {
            return self;
        }
        let mut g = self.den.clone();
        for c in &self.num {
            if !c.is_zero() {
                g = g.gcd(c);
            }
            if g.is_one() {
                return self;
            }
        }
        if !g.is_one() && !g.is_zero() {
            self.den /= &g;
            for c in &mut self.num {
                *c /= &g;
            }
        }
        if self.den.is_negative() {
            self.den = -self.den;
            for c in &mut self.num {
                *c = -c.clone();
            }
        }
        self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int_poly(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn cyclotomic_polynomials_match_known_values() {
        assert_eq!(cyclo_poly(1), int_poly(&[-1, 1]));
        assert_eq!(cyclo_poly(2), int_poly(&[1, 1]));
        assert_eq!(cyclo_poly(3), int_poly(&[1, 1, 1]));
        assert_eq!(cyclo_poly(4), int_poly(&[1, 0, 1]));
        assert_eq!(cyclo_poly(6), int_poly(&[1, -1, 1]));
        assert_eq!(cyclo_poly(12), int_poly(&[1, 0, -1, 0, 1]));
        assert_eq!(cyclo_poly(9), int_poly(&[1, 0, 0, 1, 0, 0, 1]));
    }

    #[test]
    fn primitive_root_has_exact_order() {
        for n in 1..=24u32 {
            let z = CycScalar::root_of_unity(n, 1);
            assert_eq!(z.pow(n as i64), CycScalar::one(n), "zeta_{}^{} != 1", n, n);
            for k in 1..n {
                assert_ne!(z.pow(k as i64), CycScalar::one(n), "zeta_{}^{} == 1", n, k);
            }
        }
    }

    #[test]
    fn field_arithmetic_round_trips() {
        let n = 12;
        let a = CycScalar::root_of_unity(n, 5)
            .add(&CycScalar::from_ratio(n, BigInt::from(3), BigInt::from(7)));
        let b = CycScalar::root_of_unity(n, 11).sub(&CycScalar::from_int(n, 2));
        assert_eq!(a.add(&b).sub(&b), a);
        assert_eq!(a.mul(&b).div(&b), a);
        let inv = b.inv().unwrap();
        assert!(b.mul(&inv).is_one());
    }

    #[test]
    fn unity_order_known_values() {
        assert_eq!(CycScalar::one(6).unity_order(), Some(1));
        // zeta_6^3 = -1 has order 2.
        assert_eq!(CycScalar::root_of_unity(6, 3).unity_order(), Some(2));
        // 1 + zeta_4 is not a root of unity.
        let s = CycScalar::one(4).add(&CycScalar::root_of_unity(4, 1));
        assert_eq!(s.unity_order(), None);
        assert_eq!(CycScalar::zero(4).unity_order(), None);
        // In an odd-order field, -1 = zeta_{2N} exists only after embedding;
        // -1 as a rational still has order 2.
        assert_eq!(CycScalar::from_int(3, -1).unity_order(), Some(2));
    }

    #[test]
    fn unity_order_of_all_monomials() {
        for n in 1..=24u32 {
            for k in 0..n {
                let got = CycScalar::root_of_unity(n, k as i64).unity_order().unwrap();
                let want = if k == 0 { 1 } else { n / n.gcd(&k) };
                assert_eq!(got, want, "order of zeta_{}^{}", n, k);
            }
        }
    }

    #[test]
    fn embedding_preserves_arithmetic() {
        let a = CycScalar::root_of_unity(6, 1).add(&CycScalar::from_int(6, 2));
        let b = CycScalar::root_of_unity(6, 5).sub(&CycScalar::from_int(6, 1));
        let m = 24;
        assert_eq!(a.embed(m).mul(&b.embed(m)), a.mul(&b).embed(m));
        assert_eq!(a.embed(m).add(&b.embed(m)), a.add(&b).embed(m));
        // zeta_6 embeds to zeta_24^4.
        assert_eq!(
            CycScalar::root_of_unity(6, 1).embed(24),
            CycScalar::root_of_unity(24, 4)
        );
    }

    #[test]
    fn root_power_detection() {
        assert_eq!(CycScalar::root_of_unity(12, 7).as_root_power(), Some(7));
        assert_eq!(CycScalar::from_int(12, 1).as_root_power(), Some(0));
        assert_eq!(
            CycScalar::from_ratio(12, BigInt::from(1), BigInt::from(2)).as_root_power(),
            None
        );
        assert_eq!(reduce_root_power(6, 3), (2, 1));
        assert_eq!(reduce_root_power(6, 2), (3, 1));
        assert_eq!(reduce_root_power(6, 0), (1, 0));
        assert_eq!(reduce_root_power(8, 6), (4, 3));
    }

    #[test]
    fn negative_exponents_and_powers() {
        let z = CycScalar::root_of_unity(9, 1);
        assert_eq!(z.pow(-1), CycScalar::root_of_unity(9, 8));
        assert!(z.pow(-3).mul(&z.pow(3)).is_one());
    }
}
