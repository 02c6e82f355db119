//! The growth functions ρ, ν, η and τ as exact arbitrary-precision values.
//!
//! ν and τ are towers that overflow any explicit representation for most
//! arguments, so a [`Bound`] is kept as an expression over big integers. It
//! expands to an exact decimal whenever the result is small enough, and
//! otherwise supports exact residues modulo machine-size integers, which is
//! how identities between towers are checked.

use std::fmt;
use std::rc::Rc;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BoundsError {
    #[error("k and l must be at least 1 and d at least 2 (got k={k}, d={d})")]
    Domain { k: u64, d: u64 },
}

#[derive(Debug)]
enum Node {
    Num(BigUint),
    Add(Rc<Node>, Rc<Node>),
    Mul(Rc<Node>, Rc<Node>),
    Pow(Rc<Node>, Rc<Node>),
    /// `x - 1` for `x ≥ 1`.
    Pred(Rc<Node>),
}

/// A nonnegative integer given by an expression tree.
#[derive(Clone, Debug)]
pub struct Bound(Rc<Node>);

/// Results with more bits than this are not expanded.
pub const EXPANSION_LIMIT_BITS: f64 = 4_000_000.0;

impl Bound {
    pub fn from_u64(x: u64) -> Self {
        Bound(Rc::new(Node::Num(BigUint::from(x))))
    }

    fn add(&self, o: &Bound) -> Bound {
        Bound(Rc::new(Node::Add(self.0.clone(), o.0.clone())))
    }

    fn mul(&self, o: &Bound) -> Bound {
        Bound(Rc::new(Node::Mul(self.0.clone(), o.0.clone())))
    }

    fn pow(&self, o: &Bound) -> Bound {
        Bound(Rc::new(Node::Pow(self.0.clone(), o.0.clone())))
    }

    fn pred(&self) -> Bound {
        Bound(Rc::new(Node::Pred(self.0.clone())))
    }

    /// Estimated base-2 logarithm (infinite for towers beyond `f64`).
    pub fn log2_estimate(&self) -> f64 {
        log2(&self.0)
    }

    /// The exact value, if it has at most `max_bits` bits.
    pub fn exact_within(&self, max_bits: f64) -> Option<BigUint> {
        if log2(&self.0) > max_bits + 2.0 {
            return None;
        }
        exact(&self.0, max_bits)
    }

    /// The exact value, if it has fewer than [`EXPANSION_LIMIT_BITS`] bits.
    pub fn exact(&self) -> Option<BigUint> {
        self.exact_within(EXPANSION_LIMIT_BITS)
    }

    pub fn to_u64(&self) -> Option<u64> {
        self.exact_within(64.0).and_then(|v| v.to_u64())
    }

    pub fn to_usize(&self) -> Option<usize> {
        self.to_u64().and_then(|v| usize::try_from(v).ok())
    }

    /// The value modulo `m` (`m ≥ 1`).
    pub fn residue(&self, m: u64) -> u64 {
        residue(&self.0, m)
    }
}

fn log2(n: &Node) -> f64 {
    if let Some(v) = small(n) {
        return if v == 0 { f64::NEG_INFINITY } else { (v as f64).log2() };
    }
    match n {
        Node::Num(x) => {
            if x.is_zero() {
                f64::NEG_INFINITY
            } else {
                x.bits() as f64 - 1.0 + leading_fraction(x)
            }
        }
        Node::Add(a, b) => {
            let (x, y) = (log2(a), log2(b));
            let (hi, lo) = if x >= y { (x, y) } else { (y, x) };
            if hi == f64::NEG_INFINITY {
                hi
            } else {
                hi + (1.0 + (lo - hi).exp2()).log2()
            }
        }
        Node::Mul(a, b) => log2(a) + log2(b),
        Node::Pow(a, b) => {
            let base = log2(a);
            let e = log2(b);
            if base == 0.0 || e == f64::NEG_INFINITY {
                0.0
            } else if base == f64::NEG_INFINITY {
                f64::NEG_INFINITY
            } else {
                e.exp2() * base
            }
        }
        Node::Pred(a) => log2(a),
    }
}

fn leading_fraction(x: &BigUint) -> f64 {
    let bits = x.bits();
    let shift = bits.saturating_sub(53);
    let top = (x >> shift).to_f64().unwrap_or(1.0);
    (top / (2f64).powi((bits - shift - 1) as i32)).log2()
}

fn exact(n: &Node, max_bits: f64) -> Option<BigUint> {
    if log2(n) > max_bits + 2.0 {
        return None;
    }
    Some(match n {
        Node::Num(x) => x.clone(),
        Node::Add(a, b) => exact(a, max_bits)? + exact(b, max_bits)?,
        Node::Mul(a, b) => exact(a, max_bits)? * exact(b, max_bits)?,
        Node::Pow(a, b) => {
            let base = exact(a, max_bits)?;
            let e = exact(b, max_bits)?;
            if base.is_zero() || base.is_one() || e.is_zero() {
                return Some(if e.is_zero() { BigUint::one() } else { base });
            }
            base.pow(e.to_u32()?)
        }
        Node::Pred(a) => exact(a, max_bits)? - BigUint::one(),
    })
}

/// Exact value when it fits in a `u128`.
fn small(n: &Node) -> Option<u128> {
    match n {
        Node::Num(x) => x.to_u128(),
        Node::Add(a, b) => small(a)?.checked_add(small(b)?),
        Node::Mul(a, b) => small(a)?.checked_mul(small(b)?),
        Node::Pow(a, b) => {
            let base = small(a)?;
            if base <= 1 {
                // 0^0 = 1; otherwise 0 or 1 stay fixed.
                return match small(b) {
                    Some(0) => Some(1),
                    _ => Some(base),
                };
            }
            let e = u32::try_from(small(b)?).ok()?;
            base.checked_pow(e)
        }
        Node::Pred(a) => small(a)?.checked_sub(1),
    }
}

fn totient(mut m: u64) -> u64 {
    let mut out = m;
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            while m.is_multiple_of(p) {
                m /= p;
            }
            out -= out / p;
        }
        p += 1;
    }
    if m > 1 {
        out -= out / m;
    }
    out
}

fn mod_pow(mut base: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = (acc as u128 * base as u128 % m as u128) as u64;
        }
        base = (base as u128 * base as u128 % m as u128) as u64;
        e >>= 1;
    }
    acc
}

/// Residue modulo `m`, reducing huge exponents with the generalized Euler
/// theorem `a^e ≡ a^(e mod φ(m) + φ(m)) (mod m)` for `e ≥ φ(m)`.
fn residue(n: &Node, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    match n {
        Node::Num(x) => (x % m).to_u64().expect("residue fits"),
        Node::Add(a, b) => ((residue(a, m) as u128 + residue(b, m) as u128) % m as u128) as u64,
        Node::Mul(a, b) => (residue(a, m) as u128 * residue(b, m) as u128 % m as u128) as u64,
        Node::Pred(a) => (residue(a, m) + m - 1) % m,
        Node::Pow(a, b) => {
            let phi = totient(m);
            let e = match small(b) {
                Some(e) if e < phi as u128 => e as u64,
                Some(e) => (e % phi as u128) as u64 + phi,
                None => residue(b, phi) + phi,
            };
            mod_pow(residue(a, m), e, m)
        }
    }
}

impl fmt::Display for Bound {
    /// Exact decimal when expandable, otherwise the expression.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.exact() {
            Some(v) => write!(f, "{v}"),
            None => write_node(&self.0, f),
        }
    }
}

fn write_node(n: &Node, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if let Some(v) = exact(n, 256.0) {
        return write!(f, "{v}");
    }
    match n {
        Node::Num(x) => write!(f, "{x}"),
        Node::Add(a, b) => {
            write_node(a, f)?;
            write!(f, " + ")?;
            write_node(b, f)
        }
        Node::Mul(a, b) => {
            write_node(a, f)?;
            write!(f, "·(")?;
            write_node(b, f)?;
            write!(f, ")")
        }
        Node::Pow(a, b) => {
            write!(f, "(")?;
            write_node(a, f)?;
            write!(f, ")^(")?;
            write_node(b, f)?;
            write!(f, ")")
        }
        Node::Pred(a) => {
            write!(f, "(")?;
            write_node(a, f)?;
            write!(f, " - 1)")
        }
    }
}

fn check(k: u64, d: u64) -> Result<(), BoundsError> {
    if k == 0 || d < 2 {
        Err(BoundsError::Domain { k, d })
    } else {
        Ok(())
    }
}

/// `2(d-1)^2 (2d-1)^(2d-2)`, the per-step factor of ρ.
pub fn rho_base(d: u64) -> BigUint {
    BigUint::from(2u32) * BigUint::from(d - 1).pow(2) * BigUint::from(2 * d - 1).pow((2 * d - 2) as u32)
}

fn rho_of(k: &Bound, d: u64) -> Bound {
    Bound(Rc::new(Node::Num(rho_base(d)))).pow(&k.pred())
}

fn eta_of(l: &Bound, d: u64) -> Bound {
    Bound::from_u64(8 * (d - 1)).mul(&l.pow(&l.add(&Bound::from_u64(1))))
}

/// ρ(k, d) = (2(d-1)^2 (2d-1)^(2d-2))^(k-1).
pub fn rho(k: u64, d: u64) -> Result<Bound, BoundsError> {
    check(k, d)?;
    Ok(rho_of(&Bound::from_u64(k), d))
}

/// ν(k, d) = ρ(ρ((k-1)^2 + 1, d), d).
pub fn nu(k: u64, d: u64) -> Result<Bound, BoundsError> {
    check(k, d)?;
    Ok(rho_of(&rho_of(&Bound::from_u64((k - 1) * (k - 1) + 1), d), d))
}

/// η(l, d) = 8(d-1) l^(l+1).
pub fn eta(l: u64, d: u64) -> Result<Bound, BoundsError> {
    check(l, d)?;
    Ok(eta_of(&Bound::from_u64(l), d))
}

/// η(l, d) for a symbolic `l`.
pub fn eta_bound(l: &Bound, d: u64) -> Result<Bound, BoundsError> {
    check(1, d)?;
    Ok(eta_of(l, d))
}

/// τ(k, d) = 8 η(ν(k, d), d) + 8d - 14.
pub fn tau(k: u64, d: u64) -> Result<Bound, BoundsError> {
    let n = nu(k, d)?;
    Ok(Bound::from_u64(8).mul(&eta_of(&n, d)).add(&Bound::from_u64(8 * d - 14)))
}

/// ρ(k, d) as a `u128`, saturating at `u128::MAX`.
pub fn rho_saturating(k: usize, d: usize) -> u128 {
    if k <= 1 {
        return 1;
    }
    let base = rho_base(d as u64).to_u128().unwrap_or(u128::MAX);
    let mut acc: u128 = 1;
    for _ in 1..k {
        acc = acc.saturating_mul(base);
        if acc == u128::MAX {
            break;
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        assert_eq!(rho(1, 5).unwrap().to_u64(), Some(1));
        assert_eq!(rho(2, 2).unwrap().to_u64(), Some(18));
        assert_eq!(rho(2, 3).unwrap().to_u64(), Some(5000));
        assert_eq!(rho(2, 4).unwrap().to_u64(), Some(2_117_682));
        assert_eq!(eta(2, 3).unwrap().to_u64(), Some(128));
        assert_eq!(nu(1, 3).unwrap().to_u64(), Some(1));
        assert_eq!(rho_saturating(2, 4), 2_117_682);
        assert_eq!(rho_saturating(40, 4), u128::MAX);
    }

    #[test]
    fn nu_2_2_is_18_pow_17() {
        let v = nu(2, 2).unwrap().exact().unwrap();
        assert_eq!(v, BigUint::from(18u32).pow(17));
        assert_eq!(nu(2, 2).unwrap().to_string(), "2185911559738696531968");
    }

    #[test]
    fn residues_match_exact_values() {
        for (k, d) in [(2, 2), (2, 3), (3, 2), (1, 4)] {
            let b = nu(k, d).unwrap();
            let v = b.exact().unwrap();
            for m in [2u64, 7, 97, 1_000_000_007, 4096, 999_983 * 3] {
                assert_eq!(b.residue(m), (&v % m).to_u64().unwrap());
            }
        }
        let t = tau(1, 3).unwrap();
        assert_eq!(t.to_u64(), Some(8 * 16 + 10));
    }

    #[test]
    fn domain_errors() {
        assert!(rho(0, 3).is_err());
        assert!(tau(2, 1).is_err());
    }
}
