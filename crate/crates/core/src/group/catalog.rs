//! Named groups.
//!
//! Recognized names: `C{n}`, `C{m}xC{n}`, `C2^{k}`, `D{2n}`, `V4`, `Q8`,
//! `S3`, `A4`, `S4`, `A5`, `S5`, `C7:C3`, and the semidirect products
//! `C2^3:C7`, `C2^3:(C7:C3)`, `C2^4:C7`, `C2^4:(C7:C3)`.

use super::{perm_from_cycles, BitMatrix, FiniteGroup, DEFAULT_ORDER_CAP};
use crate::error::{Error, Result};

/// Every catalog name exercised by the test suites, smallest first.
pub const CATALOG_NAMES: &[&str] = &[
    "C2", "C3", "C4", "V4", "C5", "C6", "S3", "C7", "C8", "C4xC2", "C2^3", "D8", "Q8", "D10", "A4", "C2^4", "C7:C3",
    "S4", "C2^3:C7", "A5", "C2^4:C7", "S5", "C2^3:(C7:C3)", "C2^4:(C7:C3)",
];

/// Multiplication by a root of `x^3 + x + 1` on `F8 = F2^3`; order 7.
pub fn gl3_order7() -> BitMatrix {
    BitMatrix::from_columns(3, &[0b010, 0b100, 0b011])
}

/// The Frobenius `y ↦ y^2` on `F8`; order 3, normalizes [`gl3_order7`].
pub fn gl3_frobenius() -> BitMatrix {
    BitMatrix::from_columns(3, &[0b001, 0b100, 0b110])
}

pub fn catalog_group(name: &str) -> Result<FiniteGroup> {
    catalog_group_with_cap(name, DEFAULT_ORDER_CAP)
}

pub fn catalog_group_with_cap(name: &str, cap: usize) -> Result<FiniteGroup> {
    let perms = |degree: usize, gens: &[&[&[usize]]]| -> Result<FiniteGroup> {
        let gens = gens
            .iter()
            .map(|cycles| perm_from_cycles(degree, &cycles.iter().map(|c| c.to_vec()).collect::<Vec<_>>()))
            .collect::<Result<Vec<_>>>()?;
        FiniteGroup::from_permutations(name, degree, &gens, cap)
    };
    let one = BitMatrix::identity(1);
    match name {
        "V4" => elementary_abelian(2, name, cap),
        "Q8" => quaternion(name, cap),
        "S3" => dihedral(3, name, cap),
        "A4" => perms(4, &[&[&[1, 2, 3]], &[&[1, 2], &[3, 4]]]),
        "S4" => perms(4, &[&[&[1, 2, 3, 4]], &[&[1, 2]]]),
        "A5" => perms(5, &[&[&[1, 2, 3, 4, 5]], &[&[1, 2, 3]]]),
        "S5" => perms(5, &[&[&[1, 2, 3, 4, 5]], &[&[1, 2]]]),
        "C7:C3" => frobenius21(name, cap),
        "C2^3:C7" => FiniteGroup::semidirect(name, 3, &[gl3_order7()], cap),
        "C2^3:(C7:C3)" => FiniteGroup::semidirect(name, 3, &[gl3_order7(), gl3_frobenius()], cap),
        "C2^4:C7" => FiniteGroup::semidirect(name, 4, &[gl3_order7().direct_sum(&one)], cap),
        "C2^4:(C7:C3)" => {
            FiniteGroup::semidirect(name, 4, &[gl3_order7().direct_sum(&one), gl3_frobenius().direct_sum(&one)], cap)
        }
        _ => {
            if let Some(k) = name.strip_prefix("C2^").and_then(|k| k.parse::<usize>().ok()) {
                return elementary_abelian(k, name, cap);
            }
            if let Some((a, b)) = name.split_once('x') {
                let parse = |s: &str| s.strip_prefix('C').and_then(|n| n.parse::<usize>().ok());
                if let (Some(m), Some(n)) = (parse(a), parse(b)) {
                    return cyclic_product(m, n, name, cap);
                }
            }
            if let Some(n) = name.strip_prefix('C').and_then(|n| n.parse::<usize>().ok()) {
                return cyclic_product(n, 1, name, cap);
            }
            if let Some(m) = name.strip_prefix('D').and_then(|n| n.parse::<usize>().ok()) {
                if m >= 2 && m % 2 == 0 {
                    return dihedral(m / 2, name, cap);
                }
            }
            Err(Error::Descriptor(format!("unknown catalog group {name:?}")))
        }
    }
}

fn elementary_abelian(k: usize, name: &str, cap: usize) -> Result<FiniteGroup> {
    if k == 0 || k > 16 {
        return Err(Error::Descriptor(format!("unsupported rank {k}")));
    }
    let gens: Vec<u32> = (0..k).map(|i| 1 << i).collect();
    Ok(FiniteGroup::from_generators(name, 0u32, &gens, |a, b| a ^ b, cap)?.0)
}

fn cyclic_product(m: usize, n: usize, name: &str, cap: usize) -> Result<FiniteGroup> {
    if m == 0 || n == 0 {
        return Err(Error::Descriptor(format!("bad cyclic order in {name:?}")));
    }
    let mut gens = vec![(1 % m, 0)];
    if n > 1 {
        gens.push((0, 1 % n));
    }
    let mul = |a: &(usize, usize), b: &(usize, usize)| ((a.0 + b.0) % m, (a.1 + b.1) % n);
    Ok(FiniteGroup::from_generators(name, (0, 0), &gens, mul, cap)?.0)
}

/// Dihedral group of order `2n` as pairs `r^k s^e`.
fn dihedral(n: usize, name: &str, cap: usize) -> Result<FiniteGroup> {
    if n == 0 {
        return Err(Error::Descriptor("dihedral group of order 0".into()));
    }
    let mul = |a: &(usize, u8), b: &(usize, u8)| {
        let k = if a.1 == 0 { (a.0 + b.0) % n } else { (a.0 + n - b.0) % n };
        (k, a.1 ^ b.1)
    };
    Ok(FiniteGroup::from_generators(name, (0, 0), &[(1 % n, 0), (0, 1)], mul, cap)?.0)
}

/// `<a, b | a^4, b^2 = a^2, b a b^{-1} = a^{-1}>` as pairs `a^k b^e`.
fn quaternion(name: &str, cap: usize) -> Result<FiniteGroup> {
    let mul = |x: &(usize, u8), y: &(usize, u8)| match (x.1, y.1) {
        (0, f) => ((x.0 + y.0) % 4, f),
        (_, 0) => ((x.0 + 4 - y.0) % 4, 1),
        _ => ((x.0 + 4 - y.0 + 2) % 4, 0),
    };
    Ok(FiniteGroup::from_generators(name, (0, 0), &[(1, 0), (0, 1)], mul, cap)?.0)
}

/// `C7 ⋊ C3` with `b a b^{-1} = a^2`, as pairs `a^k b^e`.
fn frobenius21(name: &str, cap: usize) -> Result<FiniteGroup> {
    let mul = |x: &(usize, usize), y: &(usize, usize)| ((x.0 + y.0 * [1, 2, 4][x.1]) % 7, (x.1 + y.1) % 3);
    Ok(FiniteGroup::from_generators(name, (0, 0), &[(1, 0), (0, 1)], mul, cap)?.0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_orders() {
        let expected = [
            ("C2", 2),
            ("C3", 3),
            ("V4", 4),
            ("C6", 6),
            ("S3", 6),
            ("D8", 8),
            ("Q8", 8),
            ("C4xC2", 8),
            ("D10", 10),
            ("A4", 12),
            ("C2^4", 16),
            ("C7:C3", 21),
            ("S4", 24),
            ("C2^3:C7", 56),
            ("A5", 60),
            ("C2^4:C7", 112),
            ("S5", 120),
            ("C2^3:(C7:C3)", 168),
            ("C2^4:(C7:C3)", 336),
        ];
        for (name, order) in expected {
            assert_eq!(catalog_group(name).unwrap().order(), order, "{name}");
        }
    }

    #[test]
    fn every_listed_name_resolves() {
        for name in CATALOG_NAMES {
            assert!(catalog_group(name).is_ok(), "{name}");
        }
    }

    #[test]
    fn q8_has_one_involution() {
        let q = catalog_group("Q8").unwrap();
        assert_eq!((0..8).filter(|&x| q.element_order(x) == 2).count(), 1);
        assert!(!q.is_abelian());
    }

    #[test]
    fn frobenius_normalizes_order7() {
        let m = gl3_order7();
        let f = gl3_frobenius();
        assert_eq!(f.multiplicative_order(), Some(3));
        // f m f^{-1} = m^2
        let f_inv = f.mul(&f);
        assert_eq!(f.mul(&m).mul(&f_inv), m.mul(&m));
    }

    #[test]
    fn unknown_name_is_rejected() {
        assert!(catalog_group("M11").is_err());
        assert!(catalog_group("D7").is_err());
    }
}
