//! Exact arithmetic in GF(p^m), the norm map of a degree-(s-1) extension,
//! and multiplicative subgroups of the base field.
//!
//! Elements are encoded by their coefficient vector read as a base-`p`
//! integer (constant term least significant), so element `k` of a prime
//! field is the residue `k`. Fields up to 2^16 elements multiply through
//! discrete-log tables; larger ones fall back to polynomial arithmetic.

use serde::Serialize;
use std::fmt;

use crate::error::{Error, Result};

/// Largest field order accepted by [`FieldContext::new`].
pub const FIELD_ORDER_CAP: u64 = 1 << 20;
const TABLE_CAP: u32 = 1 << 16;
const GENERATOR_CHECK_CAP: u32 = 10_000;
const EMBEDDING_CHECK_CAP: u32 = 256;

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Distinct prime divisors of `n`, ascending.
pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// If `q` is a prime power `p^m`, returns `(p, m)`.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    let f = prime_factors(q);
    if f.len() != 1 {
        return None;
    }
    let p = f[0];
    let mut m = 0;
    let mut r = q;
    while r > 1 {
        r /= p;
        m += 1;
    }
    Some((p, m))
}

/// An element of some [`FieldContext`]; arithmetic goes through the context.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct FieldElement(u32);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);
    pub const ONE: FieldElement = FieldElement(1);

    /// The base-`p` encoding of the coefficient vector.
    pub fn index(self) -> u32 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Clone, Debug)]
struct LogTables {
    // exp has length 2(q-1) so that exp[log a + log b] needs no reduction.
    exp: Vec<u32>,
    log: Vec<u32>,
}

/// The finite field GF(p^m) with a fixed modulus.
#[derive(Clone, Debug)]
pub struct FieldContext {
    p: u32,
    m: u32,
    q: u32,
    modulus: Vec<u32>,
    generator: Option<FieldElement>,
    tables: Option<LogTables>,
}

impl FieldContext {
    /// Builds GF(p^m) using the lexicographically smallest monic
    /// irreducible modulus of degree `m`.
    pub fn new(p: u64, m: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if m == 0 {
            return Err(Error::BadParameter("field degree must be at least 1".into()));
        }
        let q = (p as u128).checked_pow(m).unwrap_or(u128::MAX);
        if q > FIELD_ORDER_CAP as u128 {
            return Err(Error::TooLarge {
                what: "field order",
                value: q.min(u64::MAX as u128) as u64,
                limit: FIELD_ORDER_CAP,
            });
        }
        let (p, q) = (p as u32, q as u32);
        let modulus = smallest_irreducible(p, m);
        let mut ctx = FieldContext {
            p,
            m,
            q,
            modulus,
            generator: None,
            tables: None,
        };
        if q <= TABLE_CAP {
            let g = ctx.find_generator();
            ctx.generator = Some(g);
            ctx.tables = Some(ctx.build_tables(g));
        }
        debug_assert!(q > GENERATOR_CHECK_CAP || ctx.generator.is_some());
        Ok(ctx)
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.m
    }

    pub fn order(&self) -> u32 {
        self.q
    }

    /// Modulus coefficients, constant term first; the leading 1 is included.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    /// Smallest-index generator of the multiplicative group, when the
    /// field is small enough to carry log tables.
    pub fn generator(&self) -> Option<FieldElement> {
        self.generator
    }

    pub fn has_log_tables(&self) -> bool {
        self.tables.is_some()
    }

    pub fn element(&self, index: u32) -> FieldElement {
        assert!(index < self.q, "element index {index} out of range for GF({})", self.q);
        FieldElement(index)
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElement> {
        (0..self.q).map(FieldElement)
    }

    pub fn units(&self) -> impl Iterator<Item = FieldElement> {
        (1..self.q).map(FieldElement)
    }

    /// The image of the integer `k` under the prime-subfield map.
    pub fn from_int(&self, k: u64) -> FieldElement {
        FieldElement((k % self.p as u64) as u32)
    }

    pub fn coeffs(&self, x: FieldElement) -> Vec<u32> {
        let mut out = Vec::with_capacity(self.m as usize);
        let mut v = x.0;
        for _ in 0..self.m {
            out.push(v % self.p);
            v /= self.p;
        }
        out
    }

    pub fn from_coeffs(&self, coeffs: &[u32]) -> FieldElement {
        assert!(coeffs.len() <= self.m as usize);
        let mut v = 0u32;
        for &c in coeffs.iter().rev() {
            v = v * self.p + c % self.p;
        }
        FieldElement(v)
    }

    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        if self.p == 2 {
            return FieldElement(a.0 ^ b.0);
        }
        let p = self.p;
        let (mut x, mut y, mut r, mut place) = (a.0, b.0, 0u32, 1u32);
        while x > 0 || y > 0 {
            r += ((x % p + y % p) % p) * place;
            place = place.wrapping_mul(p);
            x /= p;
            y /= p;
        }
        FieldElement(r)
    }

    pub fn neg(&self, a: FieldElement) -> FieldElement {
        if self.p == 2 {
            return a;
        }
        let p = self.p;
        let (mut x, mut r, mut place) = (a.0, 0u32, 1u32);
        while x > 0 {
            r += ((p - x % p) % p) * place;
            place = place.wrapping_mul(p);
            x /= p;
        }
        FieldElement(r)
    }

    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        match &self.tables {
            Some(t) => {
                if a.0 == 0 || b.0 == 0 {
                    FieldElement::ZERO
                } else {
                    FieldElement(t.exp[(t.log[a.0 as usize] + t.log[b.0 as usize]) as usize])
                }
            }
            None => self.mul_polynomial(a, b),
        }
    }

    /// Schoolbook product reduced by the modulus; independent of the log tables.
    pub fn mul_polynomial(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        let (p, m) = (self.p as u64, self.m as usize);
        let (ca, cb) = (self.coeffs(a), self.coeffs(b));
        let mut prod = vec![0u64; 2 * m - 1];
        for (i, &x) in ca.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in cb.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x as u64 * y as u64) % p;
            }
        }
        for top in (m..prod.len()).rev() {
            let c = prod[top];
            if c == 0 {
                continue;
            }
            prod[top] = 0;
            for j in 0..m {
                let sub = c * self.modulus[j] as u64 % p;
                let k = top - m + j;
                prod[k] = (prod[k] + p - sub) % p;
            }
        }
        let digits: Vec<u32> = prod[..m].iter().map(|&d| d as u32).collect();
        self.from_coeffs(&digits)
    }

    pub fn pow(&self, a: FieldElement, e: u64) -> FieldElement {
        if e == 0 {
            return FieldElement::ONE;
        }
        if a.0 == 0 {
            return FieldElement::ZERO;
        }
        if let Some(t) = &self.tables {
            let k = (t.log[a.0 as usize] as u64 * (e % (self.q as u64 - 1))) % (self.q as u64 - 1);
            return FieldElement(t.exp[k as usize]);
        }
        self.pow_polynomial(a, e)
    }

    fn pow_polynomial(&self, a: FieldElement, mut e: u64) -> FieldElement {
        let mut base = a;
        let mut acc = FieldElement::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul_polynomial(acc, base);
            }
            base = self.mul_polynomial(base, base);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: FieldElement) -> Option<FieldElement> {
        if a.0 == 0 {
            return None;
        }
        Some(self.pow(a, self.q as u64 - 2))
    }

    pub fn div(&self, a: FieldElement, b: FieldElement) -> Option<FieldElement> {
        self.inv(b).map(|bi| self.mul(a, bi))
    }

    /// Discrete log with respect to [`FieldContext::generator`].
    pub fn log(&self, a: FieldElement) -> Option<u32> {
        let t = self.tables.as_ref()?;
        (a.0 != 0).then(|| t.log[a.0 as usize])
    }

    /// `generator^k`; requires log tables.
    pub fn exp(&self, k: u64) -> Option<FieldElement> {
        let t = self.tables.as_ref()?;
        Some(FieldElement(t.exp[(k % (self.q as u64 - 1)) as usize]))
    }

    /// Multiplicative order of a nonzero element.
    pub fn mult_order(&self, a: FieldElement) -> Option<u64> {
        if a.0 == 0 {
            return None;
        }
        let mut ord = self.q as u64 - 1;
        for l in prime_factors(ord) {
            while ord.is_multiple_of(l) && self.pow_polynomial(a, ord / l) == FieldElement::ONE {
                ord /= l;
            }
        }
        Some(ord)
    }

    fn find_generator(&self) -> FieldElement {
        let group = self.q as u64 - 1;
        (1..self.q)
            .map(FieldElement)
            .find(|&x| self.mult_order(x) == Some(group))
            .expect("multiplicative group of a finite field is cyclic")
    }

    fn build_tables(&self, g: FieldElement) -> LogTables {
        let n = (self.q - 1) as usize;
        let mut exp = Vec::with_capacity(2 * n);
        let mut log = vec![0u32; self.q as usize];
        let mut x = FieldElement::ONE;
        for i in 0..n {
            exp.push(x.0);
            log[x.0 as usize] = i as u32;
            x = self.mul_polynomial(x, g);
        }
        debug_assert_eq!(x, FieldElement::ONE);
        exp.extend_from_within(..n);
        LogTables { exp, log }
    }

    /// Evaluates a polynomial over GF(p) (constant term first) at `x`.
    pub fn eval_prime_poly(&self, coeffs: &[u32], x: FieldElement) -> FieldElement {
        coeffs.iter().rev().fold(FieldElement::ZERO, |acc, &c| {
            self.add(self.mul(acc, x), self.from_int(c as u64))
        })
    }
}

// Polynomials over GF(p) as coefficient vectors, constant term first.

fn trim(mut v: Vec<u32>) -> Vec<u32> {
    while v.len() > 1 && *v.last().unwrap() == 0 {
        v.pop();
    }
    v
}

/// Remainder of `a` modulo the monic polynomial `b`.
fn poly_rem(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let p = p as u64;
    let mut r: Vec<u64> = a.iter().map(|&c| c as u64).collect();
    let db = b.len() - 1;
    while r.len() > db {
        let top = r.len() - 1;
        let c = r[top];
        if c != 0 {
            for (j, &bj) in b.iter().enumerate() {
                let k = top - db + j;
                r[k] = (r[k] + p - c * bj as u64 % p) % p;
            }
        }
        r.pop();
    }
    trim(r.into_iter().map(|c| c as u32).collect())
}

fn monic_with_tail(tail: u32, degree: u32, p: u32) -> Vec<u32> {
    let mut v = Vec::with_capacity(degree as usize + 1);
    let mut t = tail;
    for _ in 0..degree {
        v.push(t % p);
        t /= p;
    }
    v.push(1);
    v
}

/// Trial division by every monic polynomial of degree `1..=deg/2`.
pub fn is_irreducible(poly: &[u32], p: u32) -> bool {
    let deg = poly.len() as u32 - 1;
    if deg <= 1 {
        return deg == 1;
    }
    for d in 1..=deg / 2 {
        for tail in 0..p.pow(d) {
            let divisor = monic_with_tail(tail, d, p);
            let r = poly_rem(poly, &divisor, p);
            if r.len() == 1 && r[0] == 0 {
                return false;
            }
        }
    }
    true
}

fn smallest_irreducible(p: u32, m: u32) -> Vec<u32> {
    (0..p.pow(m))
        .map(|tail| monic_with_tail(tail, m, p))
        .find(|f| is_irreducible(f, p))
        .expect("irreducible polynomials exist in every degree")
}

/// Builds GF(p^m).
pub fn build_field(p: u64, m: u32) -> Result<FieldContext> {
    FieldContext::new(p, m)
}

/// GF(q) inside GF(q^(s-1)) together with the norm map between them.
#[derive(Clone, Debug)]
pub struct NormTower {
    base: FieldContext,
    ext: FieldContext,
    s: u32,
    root_image: FieldElement,
    embed: Vec<FieldElement>,
    restrict: Vec<u32>,
    norm_exponent: u64,
    norm_table: Option<Vec<FieldElement>>,
}

impl NormTower {
    /// GF(q) with `q = p^m` and its extension of degree `s - 1`.
    pub fn new(p: u64, m: u32, s: u32) -> Result<Self> {
        if s < 2 {
            return Err(Error::BadParameter(format!("tower needs s >= 2, got {s}")));
        }
        let base = FieldContext::new(p, m)?;
        let ext = FieldContext::new(p, m * (s - 1))?;
        // Image of the base modulus root: the first root in the extension.
        let root_image = ext
            .elements()
            .find(|&y| ext.eval_prime_poly(base.modulus(), y).is_zero())
            .expect("the base modulus splits in the extension");
        let embed: Vec<FieldElement> = base
            .elements()
            .map(|x| ext.eval_prime_poly(&base.coeffs(x), root_image))
            .collect();
        let mut restrict = vec![u32::MAX; ext.order() as usize];
        for (i, y) in embed.iter().enumerate() {
            if restrict[y.0 as usize] != u32::MAX {
                return Err(Error::DegenerateInput("subfield embedding is not injective"));
            }
            restrict[y.0 as usize] = i as u32;
        }
        let q = base.order() as u64;
        let big_q = ext.order() as u64;
        let mut tower = NormTower {
            base,
            ext,
            s,
            root_image,
            embed,
            restrict,
            norm_exponent: (big_q - 1) / (q - 1),
            norm_table: None,
        };
        if tower.base.order() <= EMBEDDING_CHECK_CAP && !tower.embedding_is_homomorphism() {
            return Err(Error::DegenerateInput("subfield embedding is not a ring homomorphism"));
        }
        if tower.ext.has_log_tables() {
            let table = std::iter::once(FieldElement::ZERO)
                .chain(tower.ext.units().map(|x| tower.norm_uncached(x)))
                .collect();
            tower.norm_table = Some(table);
        }
        Ok(tower)
    }

    /// Tower for a prime power `q`.
    pub fn for_prime_power(q: u64, s: u32) -> Result<Self> {
        let (p, m) = prime_power(q).ok_or_else(|| Error::BadParameter(format!("{q} is not a prime power")))?;
        Self::new(p, m, s)
    }

    pub fn base(&self) -> &FieldContext {
        &self.base
    }

    pub fn ext(&self) -> &FieldContext {
        &self.ext
    }

    pub fn s(&self) -> u32 {
        self.s
    }

    pub fn q(&self) -> u32 {
        self.base.order()
    }

    /// Image in the extension of the root of the base modulus.
    pub fn root_image(&self) -> FieldElement {
        self.root_image
    }

    /// The exponent `1 + q + ... + q^(s-2)`.
    pub fn norm_exponent(&self) -> u64 {
        self.norm_exponent
    }

    pub fn embed(&self, x: FieldElement) -> FieldElement {
        self.embed[x.0 as usize]
    }

    /// Inverse of [`NormTower::embed`] on its image.
    pub fn restrict(&self, y: FieldElement) -> Option<FieldElement> {
        let i = self.restrict[y.0 as usize];
        (i != u32::MAX).then_some(FieldElement(i))
    }

    fn embedding_is_homomorphism(&self) -> bool {
        let (b, e) = (&self.base, &self.ext);
        if self.embed(FieldElement::ONE) != FieldElement::ONE {
            return false;
        }
        b.elements().all(|x| {
            b.elements().all(|y| {
                self.embed(b.add(x, y)) == e.add(self.embed(x), self.embed(y))
                    && self.embed(b.mul(x, y)) == e.mul(self.embed(x), self.embed(y))
            })
        })
    }

    fn norm_uncached(&self, x: FieldElement) -> FieldElement {
        let y = self.ext.pow(x, self.norm_exponent);
        self.restrict(y).expect("norm values lie in the base field")
    }

    /// `x^(1 + q + ... + q^(s-2))`, expressed in the base field.
    pub fn norm(&self, x: FieldElement) -> Result<FieldElement> {
        if x.is_zero() {
            return Err(Error::ZeroInput);
        }
        Ok(match &self.norm_table {
            Some(t) => t[x.0 as usize],
            None => self.norm_uncached(x),
        })
    }

    /// All extension elements whose norm is `x`, in index order.
    pub fn norm_fiber(&self, x: FieldElement) -> Result<Vec<FieldElement>> {
        if x.is_zero() {
            return Err(Error::ZeroInput);
        }
        Ok(self
            .ext
            .units()
            .filter(|&y| self.norm(y).expect("nonzero") == x)
            .collect())
    }

    /// Counts `C` with `A + C != 0`, `B + C != 0` and `N((A + C) / (B + C)) = x`.
    pub fn count_norm_ratio_solutions(&self, a: FieldElement, b: FieldElement, x: FieldElement) -> Result<usize> {
        if a == b {
            return Err(Error::DegenerateInput("A and B must differ"));
        }
        if x.is_zero() {
            return Err(Error::ZeroInput);
        }
        let e = &self.ext;
        Ok(e.elements()
            .filter(|&c| {
                let (ac, bc) = (e.add(a, c), e.add(b, c));
                if ac.is_zero() || bc.is_zero() {
                    return false;
                }
                let ratio = e.div(ac, bc).expect("nonzero denominator");
                self.norm(ratio).expect("nonzero ratio") == x
            })
            .count())
    }

    /// The subgroup of order `r` of the base field's unit group.
    pub fn mult_subgroup(&self, r: u32) -> Result<MultSubgroup> {
        MultSubgroup::new(&self.base, r)
    }
}

/// The order-`r` subgroup `Q_r` of GF(q)^* with a labelling of its cosets.
#[derive(Clone, Debug, Serialize)]
pub struct MultSubgroup {
    order: u32,
    elements: Vec<FieldElement>,
    coset_count: u32,
    #[serde(skip)]
    labels: Vec<u32>,
}

impl MultSubgroup {
    /// Coset of `g^k` is labelled `k mod (q-1)/r` for the field's generator `g`.
    pub fn new(field: &FieldContext, r: u32) -> Result<Self> {
        let group = field.order() - 1;
        if r == 0 || !group.is_multiple_of(r) {
            return Err(Error::NotDivisor {
                r: r as u64,
                order: group as u64,
            });
        }
        if !field.has_log_tables() {
            return Err(Error::TooLarge {
                what: "field order for subgroup labelling",
                value: field.order() as u64,
                limit: TABLE_CAP as u64,
            });
        }
        let coset_count = group / r;
        let elements = field
            .units()
            .filter(|&y| field.pow(y, r as u64) == FieldElement::ONE)
            .collect();
        let mut labels = vec![u32::MAX; field.order() as usize];
        for y in field.units() {
            labels[y.0 as usize] = field.log(y).expect("unit") % coset_count;
        }
        Ok(MultSubgroup {
            order: r,
            elements,
            coset_count,
            labels,
        })
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// Elements of the subgroup in index order.
    pub fn elements(&self) -> &[FieldElement] {
        &self.elements
    }

    pub fn coset_count(&self) -> u32 {
        self.coset_count
    }

    pub fn contains(&self, y: FieldElement) -> bool {
        self.elements.binary_search(&y).is_ok()
    }

    /// Label in `0..(q-1)/r` of the coset containing `y`; `None` for zero.
    pub fn coset_index(&self, y: FieldElement) -> Option<u32> {
        let l = self.labels[y.0 as usize];
        (l != u32::MAX).then_some(l)
    }
}
