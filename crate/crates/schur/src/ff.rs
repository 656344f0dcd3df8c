//! Small finite fields `GF(p^e)`.
//!
//! Elements of `GF(p^e)` are polynomials over `GF(p)` of degree below `e`,
//! encoded as base-`p` digit strings: the element with coefficients
//! `c_0 + c_1 x + ... + c_{e-1} x^{e-1}` has index `Σ c_i p^i`. Prime fields
//! are plain modular arithmetic. For proper prime powers the modulus is the
//! lexicographically least monic irreducible polynomial of degree `e`, found
//! by trial division; for the small orders this crate needs that recovers the
//! classical choices, e.g. `x^2+x+1` for GF(4), `x^3+x+1` for GF(8),
//! `x^2+1` for GF(9), `x^4+x+1` for GF(16), `x^3+2x+1` for GF(27),
//! `x^5+x^2+1` for GF(32).

use crate::error::{Error, Result};

/// A finite field of order `p^e`, with multiplication handled through
/// polynomial arithmetic and a cached table of powers of a fixed primitive
/// element (the least one in index order).
pub struct Field {
    p: u64,
    e: u32,
    order: u64,
    /// Coefficients of the monic modulus, length `e+1`; empty for prime fields.
    modulus: Vec<u64>,
    /// `power[i] = g^i` for the chosen primitive element, `i < order-1`.
    power: Vec<u64>,
}

impl Field {
    pub fn new(order: u64) -> Result<Field> {
        let (p, e) = prime_power(order)
            .ok_or_else(|| Error::Parameter(format!("{order} is not a prime power")))?;
        let modulus = if e == 1 {
            Vec::new()
        } else {
            least_irreducible(p, e)
        };
        let mut field = Field {
            p,
            e,
            order,
            modulus,
            power: Vec::new(),
        };
        field.install_primitive();
        Ok(field)
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.e
    }

    fn digits(&self, x: u64) -> Vec<u64> {
        let mut out = vec![0; self.e as usize];
        let mut x = x;
        for d in out.iter_mut() {
            *d = x % self.p;
            x /= self.p;
        }
        out
    }

    fn index(&self, digits: &[u64]) -> u64 {
        let mut out = 0;
        for &d in digits.iter().rev() {
            out = out * self.p + d;
        }
        out
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        if self.e == 1 {
            return (a + b) % self.p;
        }
        let (da, db) = (self.digits(a), self.digits(b));
        let sum: Vec<u64> = da.iter().zip(&db).map(|(x, y)| (x + y) % self.p).collect();
        self.index(&sum)
    }

    pub fn neg(&self, a: u64) -> u64 {
        if self.e == 1 {
            return (self.p - a % self.p) % self.p;
        }
        let da = self.digits(a);
        let neg: Vec<u64> = da.iter().map(|x| (self.p - x) % self.p).collect();
        self.index(&neg)
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        if self.e == 1 {
            return a * b % self.p;
        }
        if a == 0 || b == 0 {
            return 0;
        }
        let (da, db) = (self.digits(a), self.digits(b));
        let mut prod = vec![0u64; 2 * self.e as usize];
        for (i, &x) in da.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in db.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % self.p;
            }
        }
        // Reduce modulo the monic modulus.
        for i in (self.e as usize..prod.len()).rev() {
            let c = prod[i];
            if c == 0 {
                continue;
            }
            prod[i] = 0;
            for (k, &m) in self.modulus.iter().enumerate().take(self.e as usize) {
                let idx = i - self.e as usize + k;
                prod[idx] = (prod[idx] + c * (self.p - m) % self.p) % self.p;
            }
        }
        self.index(&prod[..self.e as usize])
    }

    pub fn pow(&self, a: u64, mut n: u64) -> u64 {
        let mut base = a;
        let mut out = 1;
        while n > 0 {
            if n & 1 == 1 {
                out = self.mul(out, base);
            }
            base = self.mul(base, base);
            n >>= 1;
        }
        out
    }

    pub fn inv(&self, a: u64) -> u64 {
        assert!(a != 0, "inverse of zero");
        self.pow(a, self.order - 2)
    }

    fn element_order(&self, a: u64) -> u64 {
        let mut x = a;
        let mut n = 1;
        while x != 1 {
            x = self.mul(x, a);
            n += 1;
        }
        n
    }

    fn install_primitive(&mut self) {
        let target = self.order - 1;
        let g = (1..self.order)
            .find(|&a| self.element_order(a) == target)
            .expect("every finite field has a primitive element");
        let mut power = Vec::with_capacity(target as usize);
        let mut x = 1;
        for _ in 0..target {
            power.push(x);
            x = self.mul(x, g);
        }
        self.power = power;
    }

    /// The fixed primitive element.
    pub fn primitive(&self) -> u64 {
        if self.order == 2 {
            1
        } else {
            self.power[1]
        }
    }

    /// `primitive^i`, with `i` reduced mod `order-1`.
    pub fn primitive_pow(&self, i: u64) -> u64 {
        self.power[(i % (self.order - 1)) as usize]
    }

    /// Nonzero squares, sorted.
    pub fn nonzero_squares(&self) -> Vec<u64> {
        let mut squares: Vec<u64> = (1..self.order).map(|a| self.mul(a, a)).collect();
        squares.sort_unstable();
        squares.dedup();
        squares
    }

    /// An element of multiplicative order `m`, taken as a fixed power of the
    /// primitive element. Errors if `m` does not divide `order - 1`.
    pub fn element_of_order(&self, m: u64) -> Result<u64> {
        if m == 0 || (self.order - 1) % m != 0 {
            return Err(Error::Parameter(format!(
                "no element of order {m} in GF({})",
                self.order
            )));
        }
        Ok(self.primitive_pow((self.order - 1) / m))
    }
}

/// Factors `n` as `p^e` for a prime `p`, if possible.
pub fn prime_power(n: u64) -> Option<(u64, u32)> {
    if n < 2 {
        return None;
    }
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            let mut m = n;
            let mut e = 0;
            while m % p == 0 {
                m /= p;
                e += 1;
            }
            return if m == 1 { Some((p, e)) } else { None };
        }
        p += 1;
    }
    Some((n, 1))
}

pub fn is_prime(n: u64) -> bool {
    matches!(prime_power(n), Some((_, 1)))
}

/// Lexicographically least monic irreducible polynomial of degree `e` over
/// `GF(p)`, compared coefficient-wise from the constant term; returned as the
/// coefficient list `c_0..c_e` with `c_e = 1`.
fn least_irreducible(p: u64, e: u32) -> Vec<u64> {
    let e = e as usize;
    let count = (p as usize).pow(e as u32);
    for idx in 0..count {
        let mut coeffs = vec![0u64; e + 1];
        let mut x = idx;
        for c in coeffs.iter_mut().take(e) {
            *c = (x % p as usize) as u64;
            x /= p as usize;
        }
        coeffs[e] = 1;
        if is_irreducible(p, &coeffs) {
            return coeffs;
        }
    }
    unreachable!("irreducible polynomials of every degree exist")
}

/// Trial division by all monic polynomials of degree up to `deg/2`.
fn is_irreducible(p: u64, poly: &[u64]) -> bool {
    let deg = poly.len() - 1;
    if poly[0] == 0 {
        return deg == 1; // divisible by x
    }
    for d in 1..=deg / 2 {
        let count = (p as usize).pow(d as u32);
        for idx in 0..count {
            let mut div = vec![0u64; d + 1];
            let mut x = idx;
            for c in div.iter_mut().take(d) {
                *c = (x % p as usize) as u64;
                x /= p as usize;
            }
            div[d] = 1;
            if poly_rem_is_zero(p, poly, &div) {
                return false;
            }
        }
    }
    true
}

fn poly_rem_is_zero(p: u64, poly: &[u64], div: &[u64]) -> bool {
    let mut rem: Vec<u64> = poly.to_vec();
    let dd = div.len() - 1;
    while rem.len() > dd {
        let lead = *rem.last().unwrap();
        if lead != 0 {
            let shift = rem.len() - 1 - dd;
            for (k, &m) in div.iter().enumerate() {
                rem[shift + k] = (rem[shift + k] + lead * (p - m) % p) % p;
            }
        }
        rem.pop();
    }
    rem.iter().all(|&c| c == 0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_power_recognition() {
        assert_eq!(prime_power(7), Some((7, 1)));
        assert_eq!(prime_power(8), Some((2, 3)));
        assert_eq!(prime_power(27), Some((3, 3)));
        assert_eq!(prime_power(6), None);
        assert_eq!(prime_power(1), None);
    }

    #[test]
    fn classical_moduli() {
        assert_eq!(Field::new(4).unwrap().modulus, vec![1, 1, 1]); // x^2+x+1
        assert_eq!(Field::new(8).unwrap().modulus, vec![1, 1, 0, 1]); // x^3+x+1
        assert_eq!(Field::new(9).unwrap().modulus, vec![1, 0, 1]); // x^2+1
        assert_eq!(Field::new(16).unwrap().modulus, vec![1, 1, 0, 0, 1]); // x^4+x+1
        assert_eq!(Field::new(27).unwrap().modulus, vec![1, 2, 0, 1]); // x^3+2x+1
        assert_eq!(Field::new(32).unwrap().modulus, vec![1, 0, 1, 0, 0, 1]); // x^5+x^2+1
    }

    #[test]
    fn field_axioms_small() {
        for q in [4u64, 8, 9, 16, 25, 27] {
            let f = Field::new(q).unwrap();
            for a in 0..q {
                for b in 0..q {
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    for c in 0..q {
                        assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                    }
                }
                if a != 0 {
                    assert_eq!(f.mul(a, f.inv(a)), 1);
                }
                assert_eq!(f.add(a, f.neg(a)), 0);
            }
        }
    }

    #[test]
    fn primitive_element_orders() {
        for q in [3u64, 7, 8, 9, 16, 27, 81, 512] {
            let f = Field::new(q).unwrap();
            let g = f.primitive();
            let mut x = g;
            let mut n = 1;
            while x != 1 {
                x = f.mul(x, g);
                n += 1;
            }
            assert_eq!(n, q - 1);
        }
    }

    #[test]
    fn squares_mod_7_and_11() {
        let f7 = Field::new(7).unwrap();
        assert_eq!(f7.nonzero_squares(), vec![1, 2, 4]);
        let f11 = Field::new(11).unwrap();
        assert_eq!(f11.nonzero_squares(), vec![1, 3, 4, 5, 9]);
    }

    #[test]
    fn element_of_order() {
        let f = Field::new(16).unwrap();
        let z = f.element_of_order(5).unwrap();
        assert_eq!(f.pow(z, 5), 1);
        assert_ne!(f.pow(z, 1), 1);
        assert!(f.element_of_order(7).is_err());
    }
}
