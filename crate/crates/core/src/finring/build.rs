//! Ring constructors: residue rings, finite fields, direct products, matrix
//! rings, truncated polynomial rings, and explicit-table round-tripping.
//!
//! Element indexing is canonical and documented per constructor:
//! * `zmod(n)`: index = residue.
//! * `gf(p, k)`: coefficient tuples over the generator powers `w^0..w^(k-1)`,
//!   low degree first; index = Σ cᵢ·pⁱ.
//! * `product`: mixed-radix digits, first factor least significant; for a
//!   binary product the pair (a, b) has index a + |first|·b.
//! * `matrix(base, k)`: row-major entry list, first entry least significant;
//!   index = Σ entryᵢ·|base|ⁱ.
//! * `trunc_poly(p, m)`: coefficient tuples low degree first, like `gf`.

use super::{Elem, FiniteRing, ShapeError};
use serde::{Deserialize, Serialize};

/// Size limits enforced by [`build_ring`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BuildCaps {
    /// Largest permitted element count.
    pub max_order: usize,
}

impl Default for BuildCaps {
    fn default() -> Self {
        BuildCaps { max_order: 65536 }
    }
}

/// A serializable recipe for a finite ring.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum RingDescriptor {
    /// Z_n, residues mod n. n = 1 gives the zero ring.
    Zmod { n: usize },
    /// GF(p^k) for prime p, as Z_p[w] modulo the first irreducible monic
    /// polynomial of degree k (coefficient tuples enumerated low degree
    /// first, so the modulus is deterministic).
    Gf { p: usize, k: usize },
    /// Direct product with componentwise operations.
    Product { factors: Vec<RingDescriptor> },
    /// k-by-k matrices over the base ring.
    Matrix { base: Box<RingDescriptor>, k: usize },
    /// Z_p[t]/(t^m): polynomials truncated at degree m.
    TruncPoly { p: usize, m: usize },
    /// Explicit tables, as produced by [`to_table_descriptor`]. Only shape
    /// is checked at build time; run axiom validation separately, so that
    /// corrupted tables can be loaded and then reported with witnesses.
    Table {
        name: String,
        order: usize,
        zero: Elem,
        one: Elem,
        add: Vec<Elem>,
        mul: Vec<Elem>,
        decomposition: Vec<(Elem, usize)>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        elem_names: Option<Vec<String>>,
    },
}

#[derive(Debug, Clone, thiserror::Error, PartialEq, Eq)]
pub enum BuildError {
    #[error("zmod modulus must be at least 1")]
    ZeroModulus,
    #[error("{p} is not prime; finite fields need a prime characteristic")]
    NotPrime { p: usize },
    #[error("field extension degree must be at least 1")]
    ZeroDegree,
    #[error("truncation index must be at least 1")]
    ZeroTruncation,
    #[error("matrix size must be at least 1")]
    ZeroMatrixSize,
    #[error("a product needs at least one factor")]
    EmptyProduct,
    #[error("ring order {requested} exceeds the cap {cap}")]
    OrderCap { requested: usize, cap: usize },
    #[error("ring order overflows the platform word size")]
    OrderOverflow,
    #[error("table descriptor is malformed: {0}")]
    BadTable(#[from] ShapeError),
    #[error("table descriptor has {names} element names for order {order}")]
    NameCount { names: usize, order: usize },
}

/// Order the descriptor would produce, without building tables.
pub fn descriptor_order(desc: &RingDescriptor) -> Result<usize, BuildError> {
    match desc {
        RingDescriptor::Zmod { n } => {
            if *n == 0 {
                Err(BuildError::ZeroModulus)
            } else {
                Ok(*n)
            }
        }
        RingDescriptor::Gf { p, k } => {
            if !is_prime(*p) {
                return Err(BuildError::NotPrime { p: *p });
            }
            if *k == 0 {
                return Err(BuildError::ZeroDegree);
            }
            checked_pow(*p, *k)
        }
        RingDescriptor::Product { factors } => {
            if factors.is_empty() {
                return Err(BuildError::EmptyProduct);
            }
            let mut order = 1usize;
            for f in factors {
                order = order
                    .checked_mul(descriptor_order(f)?)
                    .ok_or(BuildError::OrderOverflow)?;
            }
            Ok(order)
        }
        RingDescriptor::Matrix { base, k } => {
            if *k == 0 {
                return Err(BuildError::ZeroMatrixSize);
            }
            checked_pow(descriptor_order(base)?, k * k)
        }
        RingDescriptor::TruncPoly { p, m } => {
            if *p == 0 {
                return Err(BuildError::ZeroModulus);
            }
            if *m == 0 {
                return Err(BuildError::ZeroTruncation);
            }
            checked_pow(*p, *m)
        }
        RingDescriptor::Table { order, .. } => Ok(*order),
    }
}

fn checked_pow(base: usize, exp: usize) -> Result<usize, BuildError> {
    let mut acc = 1usize;
    for _ in 0..exp {
        acc = acc.checked_mul(base).ok_or(BuildError::OrderOverflow)?;
    }
    Ok(acc)
}

fn is_prime(p: usize) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Builds the ring a descriptor describes, enforcing the size cap before
/// allocating tables.
pub fn build_ring(desc: &RingDescriptor, caps: &BuildCaps) -> Result<FiniteRing, BuildError> {
    let order = descriptor_order(desc)?;
    if order > caps.max_order {
        return Err(BuildError::OrderCap {
            requested: order,
            cap: caps.max_order,
        });
    }
    match desc {
        RingDescriptor::Zmod { n } => Ok(build_zmod(*n)),
        RingDescriptor::Gf { p, k } => Ok(build_gf(*p, *k)),
        RingDescriptor::Product { factors } => {
            let parts: Vec<FiniteRing> = factors
                .iter()
                .map(|f| build_ring(f, caps))
                .collect::<Result<_, _>>()?;
            Ok(build_product(&parts, desc.clone()))
        }
        RingDescriptor::Matrix { base, k } => {
            let b = build_ring(base, caps)?;
            Ok(build_matrix(&b, *k, desc.clone()))
        }
        RingDescriptor::TruncPoly { p, m } => Ok(build_trunc_poly(*p, *m)),
        RingDescriptor::Table {
            name,
            order,
            zero,
            one,
            add,
            mul,
            decomposition,
            elem_names,
        } => {
            let ring = FiniteRing::from_tables(
                name.clone(),
                *order,
                *zero,
                *one,
                add.clone(),
                mul.clone(),
                decomposition.clone(),
            )?;
            let names = match elem_names {
                Some(ns) => {
                    if ns.len() != *order {
                        return Err(BuildError::NameCount {
                            names: ns.len(),
                            order: *order,
                        });
                    }
                    ns.clone()
                }
                None => (0..*order).map(|e| e.to_string()).collect(),
            };
            Ok(ring.with_meta(names, desc.clone()))
        }
    }
}

/// Serializes a ring back to an explicit-table descriptor, for golden files.
pub fn to_table_descriptor(ring: &FiniteRing) -> RingDescriptor {
    RingDescriptor::Table {
        name: ring.name().to_string(),
        order: ring.order(),
        zero: ring.zero(),
        one: ring.one(),
        add: (0..ring.order())
            .flat_map(|a| (0..ring.order()).map(move |b| (a, b)))
            .map(|(a, b)| ring.add(a, b))
            .collect(),
        mul: (0..ring.order())
            .flat_map(|a| (0..ring.order()).map(move |b| (a, b)))
            .map(|(a, b)| ring.mul(a, b))
            .collect(),
        decomposition: ring.decomposition().to_vec(),
        elem_names: Some(
            (0..ring.order())
                .map(|e| ring.elem_name(e).to_string())
                .collect(),
        ),
    }
}

// Convenience constructors with default caps, for tests and the catalog.

/// Z_n. Panics on n = 0.
pub fn zmod(n: usize) -> FiniteRing {
    build_ring(&RingDescriptor::Zmod { n }, &BuildCaps::default()).expect("valid modulus")
}

/// GF(p^k). Errors on composite p.
pub fn gf(p: usize, k: usize) -> Result<FiniteRing, BuildError> {
    build_ring(&RingDescriptor::Gf { p, k }, &BuildCaps::default())
}

/// Z_p[t]/(t^m). Panics on p = 0 or m = 0.
pub fn trunc_poly(p: usize, m: usize) -> FiniteRing {
    build_ring(&RingDescriptor::TruncPoly { p, m }, &BuildCaps::default())
        .expect("valid truncation parameters")
}

/// k-by-k matrices over a constructor-built base ring.
pub fn matrix(base: &FiniteRing, k: usize) -> Result<FiniteRing, BuildError> {
    let bd = base
        .descriptor()
        .cloned()
        .expect("matrix base must carry a descriptor");
    build_ring(
        &RingDescriptor::Matrix {
            base: Box::new(bd),
            k,
        },
        &BuildCaps::default(),
    )
}

/// Direct product of constructor-built rings.
pub fn product(parts: &[&FiniteRing]) -> Result<FiniteRing, BuildError> {
    let factors: Vec<RingDescriptor> = parts
        .iter()
        .map(|r| {
            r.descriptor()
                .cloned()
                .expect("product factors must carry descriptors")
        })
        .collect();
    build_ring(&RingDescriptor::Product { factors }, &BuildCaps::default())
}

fn build_zmod(n: usize) -> FiniteRing {
    let mut add = Vec::with_capacity(n * n);
    let mut mul = Vec::with_capacity(n * n);
    for a in 0..n {
        for b in 0..n {
            add.push((a + b) % n);
            mul.push((a * b) % n);
        }
    }
    let ring = FiniteRing::from_tables(
        format!("Z_{n}"),
        n,
        0,
        1 % n,
        add,
        mul,
        vec![(1 % n, n)],
    )
    .expect("zmod tables are well shaped");
    let names = (0..n).map(|e| e.to_string()).collect();
    ring.with_meta(names, RingDescriptor::Zmod { n })
}

fn build_product(parts: &[FiniteRing], desc: RingDescriptor) -> FiniteRing {
    let orders: Vec<usize> = parts.iter().map(|r| r.order()).collect();
    let order: usize = orders.iter().product();
    let digits = |e: usize| -> Vec<usize> {
        let mut e = e;
        orders
            .iter()
            .map(|&o| {
                let d = e % o;
                e /= o;
                d
            })
            .collect()
    };
    let index = |ds: &[usize]| -> usize {
        let mut acc = 0;
        let mut stride = 1;
        for (d, &o) in ds.iter().zip(&orders) {
            acc += d * stride;
            stride *= o;
        }
        acc
    };
    let mut add = Vec::with_capacity(order * order);
    let mut mul = Vec::with_capacity(order * order);
    for a in 0..order {
        let da = digits(a);
        for b in 0..order {
            let db = digits(b);
            let sum: Vec<usize> = parts
                .iter()
                .enumerate()
                .map(|(i, r)| r.add(da[i], db[i]))
                .collect();
            let prod: Vec<usize> = parts
                .iter()
                .enumerate()
                .map(|(i, r)| r.mul(da[i], db[i]))
                .collect();
            add.push(index(&sum));
            mul.push(index(&prod));
        }
    }
    let zero = index(&parts.iter().map(|r| r.zero()).collect::<Vec<_>>());
    let one = index(&parts.iter().map(|r| r.one()).collect::<Vec<_>>());
    let mut decomposition = Vec::new();
    for (i, part) in parts.iter().enumerate() {
        for &(g, m) in part.decomposition() {
            let mut ds = vec![0; parts.len()];
            ds[i] = g;
            decomposition.push((index(&ds), m));
        }
    }
    let names: Vec<String> = (0..order)
        .map(|e| {
            let ds = digits(e);
            let parts_names: Vec<&str> = parts
                .iter()
                .enumerate()
                .map(|(i, r)| r.elem_name(ds[i]))
                .collect();
            format!("({})", parts_names.join(", "))
        })
        .collect();
    let name = parts
        .iter()
        .map(|r| r.name().to_string())
        .collect::<Vec<_>>()
        .join(" x ");
    FiniteRing::from_tables(name, order, zero, one, add, mul, decomposition)
        .expect("product tables are well shaped")
        .with_meta(names, desc)
}

fn build_matrix(base: &FiniteRing, k: usize, desc: RingDescriptor) -> FiniteRing {
    let b = base.order();
    let k2 = k * k;
    let order = b.pow(k2 as u32);
    // entry list is row-major: position r·k + c, first position least
    // significant
    let entries = |e: usize| -> Vec<usize> {
        let mut e = e;
        (0..k2)
            .map(|_| {
                let d = e % b;
                e /= b;
                d
            })
            .collect()
    };
    let index = |es: &[usize]| -> usize {
        es.iter().rev().fold(0, |acc, &d| acc * b + d)
    };
    let mut add = Vec::with_capacity(order * order);
    let mut mul = Vec::with_capacity(order * order);
    for a in 0..order {
        let ea = entries(a);
        for c in 0..order {
            let ec = entries(c);
            let sum: Vec<usize> = ea
                .iter()
                .zip(&ec)
                .map(|(&x, &y)| base.add(x, y))
                .collect();
            add.push(index(&sum));
            let mut prod = vec![base.zero(); k2];
            for r in 0..k {
                for cc in 0..k {
                    let mut acc = base.zero();
                    for m in 0..k {
                        acc = base.add(acc, base.mul(ea[r * k + m], ec[m * k + cc]));
                    }
                    prod[r * k + cc] = acc;
                }
            }
            mul.push(index(&prod));
        }
    }
    let zero_es = vec![base.zero(); k2];
    let mut one_es = vec![base.zero(); k2];
    for r in 0..k {
        one_es[r * k + r] = base.one();
    }
    let mut decomposition = Vec::new();
    for pos in 0..k2 {
        for &(g, m) in base.decomposition() {
            let mut es = vec![base.zero(); k2];
            es[pos] = g;
            decomposition.push((index(&es), m));
        }
    }
    let names: Vec<String> = (0..order)
        .map(|e| {
            let es = entries(e);
            let rows: Vec<String> = (0..k)
                .map(|r| {
                    let row: Vec<&str> =
                        (0..k).map(|c| base.elem_name(es[r * k + c])).collect();
                    format!("[{}]", row.join(","))
                })
                .collect();
            format!("[{}]", rows.join(","))
        })
        .collect();
    let zero = index(&zero_es);
    let one = index(&one_es);
    FiniteRing::from_tables(
        format!("M_{k}({})", base.name()),
        order,
        zero,
        one,
        add,
        mul,
        decomposition,
    )
    .expect("matrix tables are well shaped")
    .with_meta(names, desc)
}

fn build_trunc_poly(p: usize, m: usize) -> FiniteRing {
    let order = p.pow(m as u32);
    let coeffs = |e: usize| -> Vec<usize> {
        let mut e = e;
        (0..m)
            .map(|_| {
                let d = e % p;
                e /= p;
                d
            })
            .collect()
    };
    let index = |cs: &[usize]| -> usize { cs.iter().rev().fold(0, |acc, &c| acc * p + c) };
    let mut add = Vec::with_capacity(order * order);
    let mut mul = Vec::with_capacity(order * order);
    for a in 0..order {
        let ca = coeffs(a);
        for b in 0..order {
            let cb = coeffs(b);
            let sum: Vec<usize> = ca.iter().zip(&cb).map(|(&x, &y)| (x + y) % p).collect();
            add.push(index(&sum));
            let mut prod = vec![0usize; m];
            for (i, &x) in ca.iter().enumerate() {
                for (j, &y) in cb.iter().enumerate() {
                    if i + j < m {
                        prod[i + j] = (prod[i + j] + x * y) % p;
                    }
                }
            }
            mul.push(index(&prod));
        }
    }
    let decomposition = (0..m).map(|i| (p.pow(i as u32) % order.max(1), p)).collect();
    let names: Vec<String> = (0..order).map(|e| poly_name(&coeffs(e), "t")).collect();
    let one = if p == 1 { 0 } else { 1 };
    FiniteRing::from_tables(
        format!("Z_{p}[t]/(t^{m})"),
        order,
        0,
        one,
        add,
        mul,
        decomposition,
    )
    .expect("truncated polynomial tables are well shaped")
    .with_meta(names, RingDescriptor::TruncPoly { p, m })
}

fn build_gf(p: usize, k: usize) -> FiniteRing {
    let order = p.pow(k as u32);
    let modulus = first_irreducible(p, k);
    let coeffs = |e: usize| -> Vec<usize> {
        let mut e = e;
        (0..k)
            .map(|_| {
                let d = e % p;
                e /= p;
                d
            })
            .collect()
    };
    let index = |cs: &[usize]| -> usize { cs.iter().rev().fold(0, |acc, &c| acc * p + c) };
    let mut add = Vec::with_capacity(order * order);
    let mut mul = Vec::with_capacity(order * order);
    for a in 0..order {
        let ca = coeffs(a);
        for b in 0..order {
            let cb = coeffs(b);
            let sum: Vec<usize> = ca.iter().zip(&cb).map(|(&x, &y)| (x + y) % p).collect();
            add.push(index(&sum));
            let mut prod = vec![0usize; 2 * k];
            for (i, &x) in ca.iter().enumerate() {
                for (j, &y) in cb.iter().enumerate() {
                    prod[i + j] = (prod[i + j] + x * y) % p;
                }
            }
            let rem = poly_rem(&prod, &modulus, p);
            let mut cs = vec![0usize; k];
            cs[..rem.len()].copy_from_slice(&rem);
            mul.push(index(&cs));
        }
    }
    let decomposition = (0..k).map(|i| (p.pow(i as u32), p)).collect();
    let names: Vec<String> = (0..order).map(|e| poly_name(&coeffs(e), "w")).collect();
    FiniteRing::from_tables(format!("GF({order})"), order, 0, 1, add, mul, decomposition)
        .expect("field tables are well shaped")
        .with_meta(names, RingDescriptor::Gf { p, k })
}

/// First monic irreducible polynomial of degree k over Z_p, enumerating the
/// non-leading coefficient tuples low degree first. Coefficients returned low
/// degree first, length k+1, leading coefficient 1.
fn first_irreducible(p: usize, k: usize) -> Vec<usize> {
    let count = p.pow(k as u32);
    'cand: for j in 0..count {
        let mut f: Vec<usize> = {
            let mut e = j;
            (0..k)
                .map(|_| {
                    let d = e % p;
                    e /= p;
                    d
                })
                .collect()
        };
        f.push(1);
        // trial division by every monic polynomial of degree 1..=k/2
        for d in 1..=k / 2 {
            let dcount = p.pow(d as u32);
            for jd in 0..dcount {
                let mut g: Vec<usize> = {
                    let mut e = jd;
                    (0..d)
                        .map(|_| {
                            let c = e % p;
                            e /= p;
                            c
                        })
                        .collect()
                };
                g.push(1);
                if poly_rem(&f, &g, p).is_empty() {
                    continue 'cand;
                }
            }
        }
        return f;
    }
    unreachable!("irreducible polynomials of every degree exist over prime fields")
}

/// Remainder of num by a monic divisor, coefficients low degree first, mod p.
/// Returns trailing-zero-trimmed coefficients; empty means zero remainder.
fn poly_rem(num: &[usize], den: &[usize], p: usize) -> Vec<usize> {
    let mut r: Vec<usize> = num.to_vec();
    let d = den.len() - 1;
    while r.len() > d {
        let lead = *r.last().unwrap() % p;
        let shift = r.len() - 1 - d;
        if lead != 0 {
            for (i, &c) in den.iter().enumerate() {
                let idx = shift + i;
                r[idx] = (r[idx] + p * p - (lead * c) % p) % p;
            }
        }
        r.pop();
    }
    while r.last() == Some(&0) {
        r.pop();
    }
    r
}

fn poly_name(coeffs: &[usize], var: &str) -> String {
    let mut terms = Vec::new();
    for (i, &c) in coeffs.iter().enumerate() {
        if c == 0 {
            continue;
        }
        let t = match (i, c) {
            (0, c) => c.to_string(),
            (1, 1) => var.to_string(),
            (1, c) => format!("{c}{var}"),
            (i, 1) => format!("{var}^{i}"),
            (i, c) => format!("{c}{var}^{i}"),
        };
        terms.push(t);
    }
    if terms.is_empty() {
        "0".to_string()
    } else {
        terms.join("+")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zmod_examples() {
        let r = zmod(4);
        assert_eq!(r.order(), 4);
        assert_eq!(r.add(2, 3), 1);
        assert_eq!(r.mul(2, 2), 0);
        assert_eq!(r.name(), "Z_4");
    }

    #[test]
    fn zmod_rejects_zero() {
        assert_eq!(
            build_ring(&RingDescriptor::Zmod { n: 0 }, &BuildCaps::default()),
            Err(BuildError::ZeroModulus)
        );
    }

    #[test]
    fn product_is_componentwise_and_little_endian() {
        let z2 = zmod(2);
        let r = product(&[&z2, &z2]).unwrap();
        assert_eq!(r.order(), 4);
        // (1,0) has index 1, (0,1) has index 2
        assert_eq!(r.elem_name(1), "(1, 0)");
        assert_eq!(r.elem_name(2), "(0, 1)");
        assert_eq!(r.one(), 3);
        assert_eq!(r.elem_name(r.one()), "(1, 1)");
        // componentwise: (1,0)+(0,1) = (1,1), (1,0)·(0,1) = (0,0)
        assert_eq!(r.add(1, 2), 3);
        assert_eq!(r.mul(1, 2), 0);
    }

    #[test]
    fn trunc_poly_truncates() {
        let r = trunc_poly(2, 2);
        assert_eq!(r.order(), 4);
        // t has index 2 (coefficient tuple (0,1)); t·t = 0
        assert_eq!(r.elem_name(2), "t");
        assert_eq!(r.mul(2, 2), 0);
        assert_eq!(r.elem_name(3), "1+t");
    }

    #[test]
    fn matrix_units_over_z2() {
        let r = matrix(&zmod(2), 2).unwrap();
        assert_eq!(r.order(), 16);
        // row-major little-endian: E11=1, E12=2, E21=4, E22=8, identity=9
        let (e11, e12, e21, e22) = (1, 2, 4, 8);
        assert_eq!(r.one(), 9);
        assert_eq!(r.mul(e12, e21), e11);
        assert_eq!(r.mul(e21, e12), e22);
        assert_eq!(r.mul(e21, e11), e21);
        assert_eq!(r.mul(e11, e21), 0);
        assert_eq!(r.elem_name(e11), "[[1,0],[0,0]]");
    }

    #[test]
    fn gf4_is_a_field_with_frobenius_cube_root() {
        let r = gf(2, 2).unwrap();
        assert_eq!(r.order(), 4);
        // w has index 2; modulus is w^2+w+1, so w^2 = w+1 (index 3)
        let w = 2;
        assert_eq!(r.elem_name(w), "w");
        assert_eq!(r.mul(w, w), 3);
        assert_eq!(r.pow(w, 3), r.one());
        for a in r.elements() {
            assert!(a == r.zero() || r.is_invertible(a));
        }
    }

    #[test]
    fn gf9_built_from_first_irreducible() {
        let r = gf(3, 2).unwrap();
        assert_eq!(r.order(), 9);
        // first irreducible quadratic over Z_3 is w^2+1, so w^2 = -1 = 2
        let w = 3; // coefficient tuple (0,1) over p=3
        assert_eq!(r.mul(w, w), 2);
        for a in r.elements() {
            assert!(a == r.zero() || r.is_invertible(a));
        }
    }

    #[test]
    fn gf_rejects_composite_characteristic() {
        assert_eq!(gf(4, 1).unwrap_err(), BuildError::NotPrime { p: 4 });
    }

    #[test]
    fn order_cap_enforced() {
        let desc = RingDescriptor::Matrix {
            base: Box::new(RingDescriptor::Zmod { n: 4 }),
            k: 3,
        };
        assert!(matches!(
            build_ring(&desc, &BuildCaps::default()),
            Err(BuildError::OrderCap { .. })
        ));
    }

    #[test]
    fn table_round_trip() {
        let orig = zmod(6);
        let table = to_table_descriptor(&orig);
        let reloaded = build_ring(&table, &BuildCaps::default()).unwrap();
        assert_eq!(reloaded.order(), orig.order());
        for a in orig.elements() {
            for b in orig.elements() {
                assert_eq!(reloaded.add(a, b), orig.add(a, b));
                assert_eq!(reloaded.mul(a, b), orig.mul(a, b));
            }
            assert_eq!(reloaded.elem_name(a), orig.elem_name(a));
        }
    }

    #[test]
    fn decomposition_coordinates_cover_every_ring() {
        for ring in [
            zmod(8),
            trunc_poly(2, 3),
            gf(2, 3).unwrap(),
            matrix(&zmod(2), 2).unwrap(),
            product(&[&zmod(2), &zmod(4)]).unwrap(),
        ] {
            for a in ring.elements() {
                let c = ring
                    .decomp_coords(a)
                    .unwrap_or_else(|| panic!("{} lacks coords for {a}", ring.name()));
                assert_eq!(ring.from_coords(&c), a);
            }
        }
    }
}
