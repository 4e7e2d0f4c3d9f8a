//! Table-driven arithmetic in a small base field `F_m` (m = p^r) and its
//! quadratic extension `F_{m^2} = F_m(ω)`.
//!
//! Both fields are realised inside one polynomial representation of
//! `F_{p^{2r}}`. Elements are exchanged as small integer *codes*:
//!
//! * a base-field element is a code in `0..m`. For prime `m` the code is the
//!   residue itself; for `r > 1` code `0` is zero and code `i + 1` is `β^i`
//!   with `β = ω^{m+1}` (so for `m = 4`, code 2 is `α = ω^5` and code 3 is
//!   `α^2 = ω^10`);
//! * an extension element `a + ωb` (with `a, b ∈ F_m`) has code `a + m·b`.

use std::sync::OnceLock;

use crate::error::{Error, Result};

/// Which of the two fields an element lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Level {
    Base,
    Extension,
}

/// A field element tagged with the field it belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FieldElement {
    pub level: Level,
    pub code: u8,
}

impl FieldElement {
    pub fn base(code: u8) -> Self {
        FieldElement { level: Level::Base, code }
    }

    pub fn ext(code: u8) -> Self {
        FieldElement { level: Level::Extension, code }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// Parameters that pin down a field pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FieldSpec {
    pub p: u8,
    pub r: u8,
    pub m: u8,
    /// Monic degree-2r polynomial over `F_p` defining `F_{m^2}`, low degree first.
    pub ext_poly: Vec<u8>,
    /// Minimal polynomial of the base-field generator `β` over `F_p`, low degree first.
    pub base_poly: Vec<u8>,
}

/// A base field together with its quadratic extension.
#[derive(Clone, Debug)]
pub struct Field {
    spec: FieldSpec,
    q: usize,
    // base field, indexed by code
    add: Vec<u8>,
    mul: Vec<u8>,
    neg: Vec<u8>,
    inv: Vec<u8>,
    trace: Vec<u8>,
    additive: Vec<u8>,
    from_additive: Vec<u8>,
    // extension field, indexed by code a + m*b
    ext_add: Vec<u8>,
    ext_mul: Vec<u8>,
    ext_neg: Vec<u8>,
    ext_inv: Vec<u8>,
    ext_log: Vec<u32>,
    ext_exp: Vec<u8>,
    ext_conj: Vec<u8>,
    ext_in_base: Vec<bool>,
}

fn is_prime(p: u32) -> bool {
    p >= 2 && (2..p).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

/// Polynomials over F_p of degree < 2r, encoded as base-p digit strings.
struct PolyRing {
    p: usize,
    deg: usize,
    modulus: Vec<usize>,
}

impl PolyRing {
    fn digits(&self, mut x: usize) -> Vec<usize> {
        let mut d = vec![0; self.deg];
        for slot in d.iter_mut() {
            *slot = x % self.p;
            x /= self.p;
        }
        d
    }

    fn index(&self, digits: &[usize]) -> usize {
        digits.iter().rev().fold(0, |acc, &c| acc * self.p + c)
    }

    fn add(&self, x: usize, y: usize) -> usize {
        let (a, b) = (self.digits(x), self.digits(y));
        let s: Vec<usize> = a.iter().zip(&b).map(|(u, v)| (u + v) % self.p).collect();
        self.index(&s)
    }

    fn mul(&self, x: usize, y: usize) -> usize {
        let (a, b) = (self.digits(x), self.digits(y));
        let mut prod = vec![0usize; 2 * self.deg];
        for (i, &u) in a.iter().enumerate() {
            for (j, &v) in b.iter().enumerate() {
                prod[i + j] = (prod[i + j] + u * v) % self.p;
            }
        }
        // reduce by the monic modulus from the top
        for k in (self.deg..prod.len()).rev() {
            let c = prod[k];
            if c == 0 {
                continue;
            }
            for (i, &mc) in self.modulus.iter().enumerate().take(self.deg) {
                let idx = k - self.deg + i;
                prod[idx] = (prod[idx] + self.p * self.p - c * mc % self.p) % self.p;
            }
            prod[k] = 0;
        }
        self.index(&prod[..self.deg])
    }
}

impl Field {
    /// The fixed field pair for a supported alphabet `m ∈ {2, 3, 4, 5}`.
    pub fn standard(m: u8) -> Result<&'static Field> {
        static FIELDS: [OnceLock<Field>; 4] =
            [OnceLock::new(), OnceLock::new(), OnceLock::new(), OnceLock::new()];
        let (slot, p, r, poly): (usize, u8, u8, &[u8]) = match m {
            // ω^2 = ω + 1
            2 => (0, 2, 1, &[1, 1, 1]),
            // ω^2 = ω + 1
            3 => (1, 3, 1, &[2, 2, 1]),
            // ω^4 = ω + 1
            4 => (2, 2, 2, &[1, 1, 0, 0, 1]),
            // ω^2 = ω + 3
            5 => (3, 5, 1, &[2, 4, 1]),
            other => return Err(Error::UnsupportedAlphabet(other as u32)),
        };
        Ok(FIELDS[slot].get_or_init(|| {
            Field::from_polynomial(p, r, poly).expect("built-in field polynomial is primitive")
        }))
    }

    /// Builds `F_{p^r}` and `F_{p^{2r}}` from a monic polynomial of degree `2r`
    /// whose root `ω` must be primitive.
    pub fn from_polynomial(p: u8, r: u8, ext_poly: &[u8]) -> Result<Field> {
        if !is_prime(p as u32) {
            return Err(Error::InvalidField(format!("{p} is not prime")));
        }
        if r == 0 {
            return Err(Error::InvalidField("extension degree must be positive".into()));
        }
        let deg = 2 * r as usize;
        let q = (p as usize).checked_pow(deg as u32).filter(|&q| q <= 256).ok_or_else(|| {
            Error::InvalidField(format!("{p}^{deg} elements do not fit the table representation"))
        })?;
        let m = (p as usize).pow(r as u32);
        if ext_poly.len() != deg + 1 || ext_poly[deg] != 1 {
            return Err(Error::InvalidField(format!("expected a monic polynomial of degree {deg}")));
        }
        if ext_poly.iter().any(|&c| c >= p) {
            return Err(Error::InvalidField("coefficient not reduced mod p".into()));
        }
        let ring = PolyRing {
            p: p as usize,
            deg,
            modulus: ext_poly.iter().map(|&c| c as usize).collect(),
        };

        // powers of ω = X
        let x = p as usize;
        let mut exp_poly = Vec::with_capacity(q - 1);
        let mut cur = 1usize;
        for _ in 0..q - 1 {
            exp_poly.push(cur);
            cur = ring.mul(cur, x);
        }
        if cur != 1 || exp_poly[1..].contains(&1) {
            return Err(Error::InvalidField("ω does not have order m^2 - 1".into()));
        }
        let mut log_poly = vec![u32::MAX; q];
        for (i, &e) in exp_poly.iter().enumerate() {
            log_poly[e] = i as u32;
        }

        // base-field codes -> polynomial index
        let base_to_poly: Vec<usize> = if r == 1 {
            (0..m).collect()
        } else {
            std::iter::once(0)
                .chain((0..m - 1).map(|i| exp_poly[(m + 1) * i % (q - 1)]))
                .collect()
        };
        // extension codes -> polynomial index
        let mut code_to_poly = vec![0usize; q];
        let mut poly_to_code = vec![usize::MAX; q];
        for b in 0..m {
            for a in 0..m {
                let code = a + m * b;
                let poly = ring.add(base_to_poly[a], ring.mul(x, base_to_poly[b]));
                code_to_poly[code] = poly;
                poly_to_code[poly] = code;
            }
        }
        if poly_to_code.contains(&usize::MAX) {
            return Err(Error::InvalidField("{1, ω} is not a basis over F_m".into()));
        }

        let mut ext_add = vec![0u8; q * q];
        let mut ext_mul = vec![0u8; q * q];
        for i in 0..q {
            for j in 0..q {
                let (pi, pj) = (code_to_poly[i], code_to_poly[j]);
                ext_add[i * q + j] = poly_to_code[ring.add(pi, pj)] as u8;
                ext_mul[i * q + j] = poly_to_code[ring.mul(pi, pj)] as u8;
            }
        }
        let ext_exp: Vec<u8> = exp_poly.iter().map(|&e| poly_to_code[e] as u8).collect();
        let mut ext_log = vec![u32::MAX; q];
        for c in 0..q {
            ext_log[c] = log_poly[code_to_poly[c]];
        }
        let ext_neg: Vec<u8> = (0..q)
            .map(|i| (0..q).find(|&j| ext_add[i * q + j] == 0).unwrap() as u8)
            .collect();
        let ext_inv: Vec<u8> = (0..q)
            .map(|i| if i == 0 { 0 } else { ext_exp[(q - 1 - ext_log[i] as usize) % (q - 1)] })
            .collect();
        let pow_code = |c: usize, e: usize| -> usize {
            if c == 0 {
                0
            } else {
                ext_exp[ext_log[c] as usize * e % (q - 1)] as usize
            }
        };
        let ext_conj: Vec<u8> = (0..q).map(|c| pow_code(c, m) as u8).collect();
        let ext_in_base: Vec<bool> = (0..q).map(|c| c < m).collect();
        for c in 0..q {
            // F_m is exactly the fixed field of x -> x^m, and it holds the codes 0..m
            if (ext_conj[c] as usize == c) != (c < m) {
                return Err(Error::InvalidField("base-field codes are not the fixed field".into()));
            }
        }

        let add: Vec<u8> = (0..m * m).map(|k| ext_add[(k / m) * q + k % m]).collect();
        let mul: Vec<u8> = (0..m * m).map(|k| ext_mul[(k / m) * q + k % m]).collect();
        let neg: Vec<u8> = (0..m).map(|c| ext_neg[c]).collect();
        let inv: Vec<u8> = (0..m).map(|c| ext_inv[c]).collect();

        // trace F_m -> F_p; prime-field elements are the constant polynomials
        let trace: Vec<u8> = (0..m)
            .map(|c| {
                let mut acc = 0usize;
                let mut e = 1usize;
                for _ in 0..r {
                    acc = ext_add[acc * q + pow_code(c, e)] as usize;
                    e *= p as usize;
                }
                let poly = code_to_poly[acc];
                debug_assert!(poly < p as usize);
                poly as u8
            })
            .collect();

        // additive coordinates over the basis 1, β, ..., β^{r-1}
        let basis: Vec<usize> = (0..r as usize)
            .map(|i| if r == 1 { 1 } else { base_to_poly[1 + i] })
            .collect();
        let mut additive = vec![0u8; m];
        let mut from_additive = vec![0u8; m];
        for value in 0..m {
            let mut poly = 0usize;
            let mut rest = value;
            for &b in &basis {
                let digit = rest % p as usize;
                rest /= p as usize;
                poly = ring.add(poly, ring.mul(digit, b));
            }
            let code = poly_to_code[poly];
            additive[code] = value as u8;
            from_additive[value] = code as u8;
        }

        // minimal polynomial of β (the base-field generator) over F_p
        let beta_code = if r == 1 {
            poly_to_code[exp_poly[(m + 1) % (q - 1)]]
        } else {
            2
        };
        let mut min_poly: Vec<usize> = vec![1]; // ext codes, low degree first
        let mut e = 1usize;
        for _ in 0..r {
            let root = pow_code(beta_code, e);
            let neg_root = ext_neg[root] as usize;
            let mut next = vec![0usize; min_poly.len() + 1];
            for (i, &c) in min_poly.iter().enumerate() {
                next[i + 1] = ext_add[next[i + 1] * q + c] as usize;
                let t = ext_mul[c * q + neg_root] as usize;
                next[i] = ext_add[next[i] * q + t] as usize;
            }
            min_poly = next;
            e *= p as usize;
        }
        let base_poly: Vec<u8> = min_poly.iter().map(|&c| code_to_poly[c] as u8).collect();

        Ok(Field {
            spec: FieldSpec { p, r, m: m as u8, ext_poly: ext_poly.to_vec(), base_poly },
            q,
            add,
            mul,
            neg,
            inv,
            trace,
            additive,
            from_additive,
            ext_add,
            ext_mul,
            ext_neg,
            ext_inv,
            ext_log,
            ext_exp,
            ext_conj,
            ext_in_base,
        })
    }

    pub fn spec(&self) -> &FieldSpec {
        &self.spec
    }

    pub fn p(&self) -> u8 {
        self.spec.p
    }

    pub fn r(&self) -> u8 {
        self.spec.r
    }

    pub fn m(&self) -> u8 {
        self.spec.m
    }

    /// Size of the extension field, `m^2`.
    pub fn q(&self) -> usize {
        self.q
    }

    // ---- base field ----

    #[inline]
    pub fn add(&self, a: u8, b: u8) -> u8 {
        self.add[a as usize * self.spec.m as usize + b as usize]
    }

    #[inline]
    pub fn sub(&self, a: u8, b: u8) -> u8 {
        self.add(a, self.neg[b as usize])
    }

    #[inline]
    pub fn mul(&self, a: u8, b: u8) -> u8 {
        self.mul[a as usize * self.spec.m as usize + b as usize]
    }

    #[inline]
    pub fn neg(&self, a: u8) -> u8 {
        self.neg[a as usize]
    }

    /// Multiplicative inverse; `inv(0)` is reported as an error by [`Field::inverse`]
    /// and returns 0 here.
    #[inline]
    pub fn inv(&self, a: u8) -> u8 {
        self.inv[a as usize]
    }

    /// `tr_{m/p}(a) = Σ_{i<r} a^{p^i}`, returned as an integer in `0..p`.
    #[inline]
    pub fn trace(&self, a: u8) -> u8 {
        self.trace[a as usize]
    }

    /// Coordinates of `a` over `F_p` packed as base-p digits (bits when p = 2).
    #[inline]
    pub fn additive(&self, a: u8) -> u8 {
        self.additive[a as usize]
    }

    #[inline]
    pub fn from_additive(&self, v: u8) -> u8 {
        self.from_additive[v as usize]
    }

    /// `F_m` additive basis over `F_p` as base-field codes.
    pub fn additive_basis(&self) -> Vec<u8> {
        (0..self.spec.r as u32).map(|i| self.from_additive((self.spec.p as u32).pow(i) as u8)).collect()
    }

    /// Nonzero base-field elements in code order.
    pub fn units(&self) -> impl Iterator<Item = u8> {
        1..self.spec.m
    }

    pub fn base_pow(&self, a: u8, e: u64) -> u8 {
        self.ext_pow(a, e)
    }

    // ---- extension field ----

    #[inline]
    pub fn omega(&self) -> u8 {
        self.spec.m
    }

    /// Code of `a + ωb`.
    #[inline]
    pub fn ext_from_parts(&self, a: u8, b: u8) -> u8 {
        a + self.spec.m * b
    }

    /// `(a, b)` with `x = a + ωb`.
    #[inline]
    pub fn ext_parts(&self, x: u8) -> (u8, u8) {
        (x % self.spec.m, x / self.spec.m)
    }

    #[inline]
    pub fn ext_add(&self, x: u8, y: u8) -> u8 {
        self.ext_add[x as usize * self.q + y as usize]
    }

    #[inline]
    pub fn ext_sub(&self, x: u8, y: u8) -> u8 {
        self.ext_add(x, self.ext_neg[y as usize])
    }

    #[inline]
    pub fn ext_mul(&self, x: u8, y: u8) -> u8 {
        self.ext_mul[x as usize * self.q + y as usize]
    }

    #[inline]
    pub fn ext_neg(&self, x: u8) -> u8 {
        self.ext_neg[x as usize]
    }

    #[inline]
    pub fn ext_inv(&self, x: u8) -> u8 {
        self.ext_inv[x as usize]
    }

    pub fn ext_pow(&self, x: u8, e: u64) -> u8 {
        if e == 0 {
            return self.ext_exp[0];
        }
        if x == 0 {
            return 0;
        }
        let order = (self.q - 1) as u64;
        let k = (self.ext_log[x as usize] as u64 * (e % order)) % order;
        self.ext_exp[k as usize]
    }

    /// `ω^k`.
    pub fn omega_pow(&self, k: u64) -> u8 {
        self.ext_exp[(k % (self.q as u64 - 1)) as usize]
    }

    /// Discrete logarithm to base ω; `None` for zero.
    pub fn ext_log(&self, x: u8) -> Option<u32> {
        (x != 0).then(|| self.ext_log[x as usize])
    }

    /// `x ↦ x^m`, the involution of `F_{m^2}` fixing `F_m`.
    #[inline]
    pub fn conjugate(&self, x: u8) -> u8 {
        self.ext_conj[x as usize]
    }

    pub fn is_base(&self, x: u8) -> bool {
        self.ext_in_base[x as usize]
    }

    /// Multiplicative order of an extension element.
    pub fn ext_order(&self, x: u8) -> Option<u64> {
        let l = self.ext_log(x)? as u64;
        let n = self.q as u64 - 1;
        Some(n / gcd(n, l))
    }

    // ---- tagged API ----

    fn check_code(&self, x: FieldElement) -> Result<()> {
        let bound = match x.level {
            Level::Base => self.spec.m as usize,
            Level::Extension => self.q,
        };
        if (x.code as usize) < bound {
            Ok(())
        } else {
            Err(Error::InvalidField(format!("code {} out of range", x.code)))
        }
    }

    /// Binary arithmetic on tagged elements of the same field.
    pub fn arith(&self, op: ArithOp, x: FieldElement, y: FieldElement) -> Result<FieldElement> {
        if x.level != y.level {
            return Err(Error::MixedFields);
        }
        self.check_code(x)?;
        self.check_code(y)?;
        let code = match (x.level, op) {
            (Level::Base, ArithOp::Add) => self.add(x.code, y.code),
            (Level::Base, ArithOp::Sub) => self.sub(x.code, y.code),
            (Level::Base, ArithOp::Mul) => self.mul(x.code, y.code),
            (Level::Base, ArithOp::Div) => {
                self.mul(x.code, self.inverse(FieldElement::base(y.code))?.code)
            }
            (Level::Extension, ArithOp::Add) => self.ext_add(x.code, y.code),
            (Level::Extension, ArithOp::Sub) => self.ext_sub(x.code, y.code),
            (Level::Extension, ArithOp::Mul) => self.ext_mul(x.code, y.code),
            (Level::Extension, ArithOp::Div) => {
                self.ext_mul(x.code, self.inverse(FieldElement::ext(y.code))?.code)
            }
        };
        Ok(FieldElement { level: x.level, code })
    }

    pub fn inverse(&self, x: FieldElement) -> Result<FieldElement> {
        self.check_code(x)?;
        if x.code == 0 {
            return Err(Error::InverseOfZero);
        }
        let code = match x.level {
            Level::Base => self.inv(x.code),
            Level::Extension => self.ext_inv(x.code),
        };
        Ok(FieldElement { level: x.level, code })
    }

    pub fn power(&self, x: FieldElement, e: u64) -> Result<FieldElement> {
        self.check_code(x)?;
        Ok(FieldElement { level: x.level, code: self.ext_pow(x.code, e) })
    }

    /// Trace of a base-field element down to `F_p`.
    pub fn trace_to_prime(&self, x: FieldElement) -> Result<u8> {
        if x.level != Level::Base {
            return Err(Error::MixedFields);
        }
        self.check_code(x)?;
        Ok(self.trace(x.code))
    }

    // ---- inner products ----

    /// `Σ (u_i v_i^m − u_i^m v_i) / (ω − ω^m)`, an element of `F_m` (returned as a base code).
    pub fn hermitian_form(&self, u: &[u8], v: &[u8]) -> Result<u8> {
        if u.len() != v.len() {
            return Err(Error::LengthMismatch(u.len(), v.len()));
        }
        let mut acc = 0u8;
        for (&x, &y) in u.iter().zip(v) {
            let t = self.ext_sub(self.ext_mul(x, self.conjugate(y)), self.ext_mul(self.conjugate(x), y));
            acc = self.ext_add(acc, t);
        }
        let w = self.omega();
        let denom = self.ext_sub(w, self.conjugate(w));
        let value = self.ext_mul(acc, self.ext_inv(denom));
        debug_assert!(self.is_base(value));
        Ok(value)
    }

    /// Hermitian trace inner product, `tr_{m/p}` of [`Field::hermitian_form`].
    pub fn hermitian_ip(&self, u: &[u8], v: &[u8]) -> Result<u8> {
        Ok(self.trace(self.hermitian_form(u, v)?))
    }

    /// `b·a' − b'·a` over `F_m` for rows given as `(a | b)` of length 2n.
    pub fn symplectic_form(&self, row1: &[u8], row2: &[u8]) -> Result<u8> {
        if row1.len() != row2.len() {
            return Err(Error::LengthMismatch(row1.len(), row2.len()));
        }
        if !row1.len().is_multiple_of(2) {
            return Err(Error::LengthMismatch(row1.len(), row1.len() + 1));
        }
        let n = row1.len() / 2;
        let (a, b) = row1.split_at(n);
        let (a2, b2) = row2.split_at(n);
        let mut acc = 0u8;
        for i in 0..n {
            acc = self.add(acc, self.mul(b[i], a2[i]));
            acc = self.sub(acc, self.mul(b2[i], a[i]));
        }
        Ok(acc)
    }

    /// Symplectic inner product `tr_{m/p}(b·a' − b'·a)`.
    pub fn symplectic_ip(&self, row1: &[u8], row2: &[u8]) -> Result<u8> {
        Ok(self.trace(self.symplectic_form(row1, row2)?))
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_addition() {
        let f = Field::standard(3).unwrap();
        assert_eq!(f.add(2, 2), 1);
        let r = f.arith(ArithOp::Add, FieldElement::base(2), FieldElement::base(2)).unwrap();
        assert_eq!(r, FieldElement::base(1));
    }

    #[test]
    fn f4_generator_squares_to_successor() {
        // m = 2: the extension is F_4 with ω^2 = ω + 1
        let f = Field::standard(2).unwrap();
        let w = f.omega();
        assert_eq!(f.ext_mul(w, w), f.ext_from_parts(1, 1));
    }

    #[test]
    fn f9_omega_order() {
        let f = Field::standard(3).unwrap();
        let w = FieldElement::ext(f.omega());
        assert_eq!(f.power(w, 8).unwrap(), FieldElement::ext(1));
        assert_eq!(f.power(w, 4).unwrap(), FieldElement::ext(2));
        assert_eq!(f.ext_order(f.omega()), Some(8));
    }

    #[test]
    fn errors() {
        let f = Field::standard(5).unwrap();
        assert_eq!(f.inverse(FieldElement::base(0)), Err(Error::InverseOfZero));
        assert_eq!(
            f.arith(ArithOp::Mul, FieldElement::base(1), FieldElement::ext(1)),
            Err(Error::MixedFields)
        );
        assert_eq!(
            f.arith(ArithOp::Div, FieldElement::ext(3), FieldElement::ext(0)),
            Err(Error::InverseOfZero)
        );
        assert!(matches!(Field::standard(7), Err(Error::UnsupportedAlphabet(7))));
        // x^2 + 1 over F_3 is irreducible but its root has order 4, not 8
        assert!(Field::from_polynomial(3, 1, &[1, 0, 1]).is_err());
    }

    #[test]
    fn traces() {
        let f3 = Field::standard(3).unwrap();
        assert_eq!(f3.trace(2), 2);
        let f4 = Field::standard(4).unwrap();
        assert_eq!(f4.trace(1), 0);
        // α = ω^5 has code 2, α^2 = α + 1
        assert_eq!(f4.trace(2), 1);
        assert_eq!(f4.mul(2, 2), 3);
        assert_eq!(f4.add(2, 1), 3);
    }

    #[test]
    fn f16_subfield_matches_omega_powers() {
        let f = Field::standard(4).unwrap();
        assert_eq!(f.omega_pow(5), 2);
        assert_eq!(f.omega_pow(10), 3);
        assert_eq!(f.ext_pow(f.omega(), 4), f.ext_add(f.omega(), 1));
    }

    #[test]
    fn conjugation() {
        let f = Field::standard(3).unwrap();
        assert_eq!(f.conjugate(1), 1);
        let w = f.omega();
        assert_eq!(f.conjugate(f.conjugate(w)), w);
        // ω^3 = 2ω + 1
        assert_eq!(f.conjugate(w), f.ext_from_parts(1, 2));
    }

    #[test]
    fn hermitian_over_f4() {
        let f = Field::standard(2).unwrap();
        let u = [1u8];
        let v = [f.omega()];
        assert_eq!(f.hermitian_ip(&u, &v).unwrap(), 1);
        assert_eq!(f.hermitian_ip(&u, &u).unwrap(), 0);
        assert_eq!(f.hermitian_ip(&u, &[1, 2]), Err(Error::LengthMismatch(1, 2)));
    }

    #[test]
    fn symplectic_examples() {
        let f3 = Field::standard(3).unwrap();
        let r1 = [1, 1, 0, 1, 0, 2, 0, 0];
        let r2 = [1, 2, 1, 1, 1, 0, 1, 0];
        assert_eq!(f3.symplectic_ip(&r1, &r2).unwrap(), 0);
        assert_eq!(f3.symplectic_ip(&r1, &r1).unwrap(), 0);
        let f2 = Field::standard(2).unwrap();
        assert_eq!(f2.symplectic_ip(&[1, 0, 0, 0], &[0, 0, 1, 0]).unwrap(), 1);
    }

    #[test]
    fn base_polynomials_are_reported() {
        let f4 = Field::standard(4).unwrap();
        // α satisfies α^2 + α + 1 = 0 over F_2
        assert_eq!(f4.spec().base_poly, vec![1, 1, 1]);
        let f5 = Field::standard(5).unwrap();
        assert_eq!(f5.spec().base_poly.len(), 2);
    }
}
