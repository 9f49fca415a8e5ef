use serde::{Deserialize, Serialize};

use crate::abgrp::TableGroup;
use crate::{Caps, Error, Result};

/// `Z/m_1 x ... x Z/m_k` with every `m_i` a prime power, sorted ascending.
///
/// Elements are encoded as `usize` in mixed radix, first component most
/// significant, so that index order is lexicographic order on residue tuples.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FiniteCommRing {
    moduli: Vec<u64>,
    /// stride of component i in the index encoding
    strides: Vec<usize>,
    size: usize,
}

fn prime_power_split(mut m: u64) -> Vec<u64> {
    let mut out = vec![];
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            let mut q = 1;
            while m.is_multiple_of(p) {
                m /= p;
                q *= p;
            }
            out.push(q);
        }
        p += 1;
    }
    if m > 1 {
        out.push(m);
    }
    out
}

fn prime_of(q: u64) -> u64 {
    (2..=q).find(|p| q.is_multiple_of(*p)).unwrap()
}

impl FiniteCommRing {
    pub fn new(moduli: &[u64]) -> Result<Self> {
        Self::with_caps(moduli, &Caps::default())
    }

    pub fn with_caps(moduli: &[u64], caps: &Caps) -> Result<Self> {
        if moduli.is_empty() {
            return Err(Error::InvalidInput("a ring needs at least one modulus".into()));
        }
        let mut split = vec![];
        let mut size: u128 = 1;
        for &m in moduli {
            if m < 2 {
                return Err(Error::InvalidInput(format!("modulus {m} must be at least 2")));
            }
            size *= m as u128;
            if size > caps.ring_size as u128 {
                let total: u128 = moduli.iter().map(|&m| m as u128).product();
                return Err(Error::cap("ring size", total, caps.ring_size));
            }
            split.extend(prime_power_split(m));
        }
        split.sort_by_key(|&q| (prime_of(q), q));
        let mut strides = vec![1; split.len()];
        for i in (0..split.len().saturating_sub(1)).rev() {
            strides[i] = strides[i + 1] * split[i + 1] as usize;
        }
        Ok(FiniteCommRing { moduli: split, strides, size: size as usize })
    }

    pub fn moduli(&self) -> &[u64] {
        &self.moduli
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn zero(&self) -> usize {
        0
    }

    pub fn one(&self) -> usize {
        self.strides.iter().sum()
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.size
    }

    pub fn residue(&self, a: usize, i: usize) -> u64 {
        ((a / self.strides[i]) % self.moduli[i] as usize) as u64
    }

    pub fn residues(&self, a: usize) -> Vec<u64> {
        (0..self.moduli.len()).map(|i| self.residue(a, i)).collect()
    }

    /// Encodes a residue tuple; entries are reduced modulo the moduli.
    pub fn elem(&self, r: &[u64]) -> usize {
        assert_eq!(r.len(), self.moduli.len(), "residue tuple has the wrong length");
        r.iter().zip(&self.moduli).zip(&self.strides).map(|((&x, &m), &s)| (x % m) as usize * s).sum()
    }

    fn zip_with(&self, a: usize, b: usize, f: impl Fn(u64, u64, u64) -> u64) -> usize {
        let mut out = 0;
        for i in 0..self.moduli.len() {
            let m = self.moduli[i];
            out += f(self.residue(a, i), self.residue(b, i), m) as usize * self.strides[i];
        }
        out
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        self.zip_with(a, b, |x, y, m| (x + y) % m)
    }

    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.zip_with(a, b, |x, y, m| (x + m - y) % m)
    }

    pub fn neg(&self, a: usize) -> usize {
        self.sub(0, a)
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.zip_with(a, b, |x, y, m| x * y % m)
    }

    pub fn is_idempotent(&self, e: usize) -> bool {
        e < self.size && self.mul(e, e) == e
    }

    fn check_idempotent(&self, e: usize) -> Result<()> {
        if !self.is_idempotent(e) {
            return Err(Error::NotIdempotent(format!("{:?}", self.residues(e))));
        }
        Ok(())
    }

    /// All idempotents (the 0/1 tuples), in index order.
    pub fn idempotents(&self) -> Vec<usize> {
        let k = self.moduli.len();
        let mut out: Vec<usize> = (0..1usize << k)
            .map(|mask| (0..k).filter(|i| mask >> (k - 1 - i) & 1 == 1).map(|i| self.strides[i]).sum())
            .collect();
        out.sort_unstable();
        out
    }

    /// `{a : a e = a}`, in index order.
    pub fn ideal_elements(&self, e: usize) -> Result<Vec<usize>> {
        self.check_idempotent(e)?;
        Ok(self.elements().filter(|&a| self.mul(a, e) == a).collect())
    }

    /// Inverse of `u` inside the unit group of `K e`, if `u` is such a unit.
    /// For `e = 0` the only unit is 0, its own inverse.
    pub fn inverse_in(&self, u: usize, e: usize) -> Option<usize> {
        let mut out = 0;
        for i in 0..self.moduli.len() {
            let m = self.moduli[i];
            let (x, ei) = (self.residue(u, i), self.residue(e, i));
            let y = if ei == 0 {
                if x != 0 {
                    return None;
                }
                0
            } else {
                // p-power modulus: x is a unit iff p does not divide x
                if x % prime_of(m) == 0 {
                    return None;
                }
                (1..m).find(|y| x * y % m == 1)?
            };
            out += y as usize * self.strides[i];
        }
        Some(out)
    }

    pub fn is_unit_in(&self, u: usize, e: usize) -> bool {
        self.inverse_in(u, e).is_some()
    }

    /// `U(K e)`, in index order.
    pub fn units(&self, e: usize) -> Result<Vec<usize>> {
        self.check_idempotent(e)?;
        Ok(self.elements().filter(|&u| self.is_unit_in(u, e)).collect())
    }

    /// Invariant-factor structure of `U(K e)` with coordinate maps.
    pub fn unit_group_structure(&self, e: usize, caps: &Caps) -> Result<TableGroup> {
        let units = self.units(e)?;
        if units.len() as u64 > caps.enumeration {
            return Err(Error::cap("unit group order", units.len(), caps.enumeration));
        }
        TableGroup::build(units, e, |a, b| self.mul(a, b))
    }

    /// Human-readable element, e.g. `(2,0)`.
    pub fn show(&self, a: usize) -> String {
        let r: Vec<String> = self.residues(a).iter().map(|x| x.to_string()).collect();
        format!("({})", r.join(","))
    }
}
