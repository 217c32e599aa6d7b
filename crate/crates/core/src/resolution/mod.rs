//! Graded free resolutions over the polynomial ring: Schreyer syzygies,
//! minimalization, Betti tables, and the independent Koszul oracle.

pub mod betti;
pub mod chi;
pub mod koszul;
pub mod minimalize;
pub mod schreyer;
pub mod stable;

use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::monomial::monomials_of_degree;
use crate::order::MonomialOrder;
use crate::poly::Polynomial;
use serde::{Deserialize, Serialize};

pub use betti::{betti_table, homological_invariants, BettiTable, HomologicalInvariants};
pub use minimalize::minimalize;
pub use schreyer::free_resolution;

/// A graded free module, described by its basis twists: basis element
/// i has degree `twists[i]`. Twists are kept weakly increasing.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradedFreeModule {
    pub twists: Vec<i64>,
}

impl GradedFreeModule {
    pub fn rank(&self) -> usize {
        self.twists.len()
    }

    /// Basis elements of the degree-d graded piece, as (basis index,
    /// monomial) pairs in a deterministic order.
    pub fn graded_basis(&self, nvars: usize, d: i64) -> Vec<(usize, crate::monomial::Monomial)> {
        let mut out = Vec::new();
        for (i, &a) in self.twists.iter().enumerate() {
            if d < a {
                continue;
            }
            for m in monomials_of_degree(nvars, (d - a) as u32) {
                out.push((i, m));
            }
        }
        out
    }
}

/// A degree-0 map of graded free modules, entries[row][col] with rows
/// indexing the target basis. Every entry is homogeneous of degree
/// source twist minus target twist.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedMap {
    pub source: GradedFreeModule,
    pub target: GradedFreeModule,
    pub entries: Vec<Vec<Polynomial>>,
}

impl GradedMap {
    pub fn is_homogeneous(&self) -> bool {
        for (i, row) in self.entries.iter().enumerate() {
            for (j, p) in row.iter().enumerate() {
                if p.is_zero() {
                    continue;
                }
                let expect = self.source.twists[j] - self.target.twists[i];
                if expect < 0 || p.homogeneous_degree() != Some(expect as u32) {
                    return false;
                }
            }
        }
        true
    }

    /// Applies the map to a source column vector of polynomials.
    pub fn apply(&self, v: &[Polynomial], k: PrimeField) -> Vec<Polynomial> {
        let mut out = vec![Polynomial::zero(); self.target.rank()];
        for (i, row) in self.entries.iter().enumerate() {
            for (j, e) in row.iter().enumerate() {
                if e.is_zero() || v[j].is_zero() {
                    continue;
                }
                out[i] = out[i].add(&e.mul(&v[j], k), k);
            }
        }
        out
    }

    /// The matrix of the degree-d slice in the graded bases, for exact
    /// rank computations.
    pub fn degree_slice(&self, nvars: usize, d: i64, k: PrimeField) -> crate::linalg::FpMat {
        let src = self.source.graded_basis(nvars, d);
        let tgt = self.target.graded_basis(nvars, d);
        let tgt_index: std::collections::HashMap<(usize, &[u16]), usize> = tgt
            .iter()
            .enumerate()
            .map(|(pos, (i, m))| ((*i, m.exps()), pos))
            .collect();
        let mut mat = crate::linalg::FpMat::zero(k, tgt.len(), src.len());
        for (col, (j, m)) in src.iter().enumerate() {
            for (i, row) in self.entries.iter().enumerate() {
                let e = &row[*j];
                if e.is_zero() {
                    continue;
                }
                for (mono, c) in e.mul_by_monomial(m, crate::field::Fp::ONE, k).terms() {
                    let pos = tgt_index[&(i, mono.exps())];
                    mat.set(pos, col, *c);
                }
            }
        }
        mat
    }
}

/// A chain of graded maps maps[l]: F_{l+1} -> F_l with F_0 the ambient
/// rank-one module; composition of consecutive maps is zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FreeResolution {
    pub maps: Vec<GradedMap>,
}

impl FreeResolution {
    pub fn length(&self) -> usize {
        self.maps.len()
    }

    /// F_l for l = 0 .. length.
    pub fn module(&self, l: usize) -> &GradedFreeModule {
        if l == 0 {
            &self.maps[0].target
        } else {
            &self.maps[l - 1].source
        }
    }

    /// Checks homogeneity of every map and that consecutive maps
    /// compose to zero.
    pub fn validate(&self, k: PrimeField) -> Result<()> {
        for (l, m) in self.maps.iter().enumerate() {
            if !m.is_homogeneous() {
                return Err(Error::Precondition(format!(
                    "map {l} is not homogeneous"
                )));
            }
            if l + 1 < self.maps.len() {
                let next = &self.maps[l + 1];
                for col in 0..next.source.rank() {
                    let v: Vec<Polynomial> =
                        next.entries.iter().map(|row| row[col].clone()).collect();
                    let comp = m.apply(&v, k);
                    if comp.iter().any(|p| !p.is_zero()) {
                        return Err(Error::Precondition(format!(
                            "maps {l} and {} do not compose to zero",
                            l + 1
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// Degreewise exactness at position l (1-based within the chain)
    /// in degree d: rank(d_l)_d + rank(d_{l+1})_d = dim (F_l)_d.
    pub fn exact_at_degree(&self, nvars: usize, l: usize, d: i64, k: PrimeField) -> bool {
        let fl_dim = self.module(l).graded_basis(nvars, d).len();
        let r1 = self.maps[l - 1].degree_slice(nvars, d, k).rank();
        let r2 = if l < self.maps.len() {
            self.maps[l].degree_slice(nvars, d, k).rank()
        } else {
            0
        };
        r1 + r2 == fl_dim
    }
}

/// Syzygies of an arbitrary list of homogeneous elements of a free
/// module with the given twists: returns the map (syzygy module ->
/// input module) whose image is the kernel of the evaluation map.
pub fn syzygies(
    gens: &[Vec<Polynomial>],
    f_twists: &[i64],
    order: MonomialOrder,
    k: PrimeField,
) -> Result<GradedMap> {
    // twist of each generator
    let mut gen_twists = Vec::with_capacity(gens.len());
    for g in gens {
        let mut tw: Option<i64> = None;
        for (c, p) in g.iter().enumerate() {
            if let Some(d) = p.homogeneous_degree() {
                let t = d as i64 + f_twists[c];
                if let Some(prev) = tw {
                    if prev != t {
                        return Err(Error::Precondition(
                            "module element is not homogeneous".into(),
                        ));
                    }
                } else {
                    tw = Some(t);
                }
            } else if !p.is_zero() {
                return Err(Error::Precondition(
                    "module element is not homogeneous".into(),
                ));
            }
        }
        gen_twists.push(tw.ok_or(Error::ZeroGenerator)?);
    }
    let syz = crate::modules::syzygies_of(gens, f_twists.len(), order, k);
    let mut syz_twists = Vec::with_capacity(syz.len());
    for s in &syz {
        let mut tw: Option<i64> = None;
        for (c, p) in s.iter().enumerate() {
            if let Some(d) = p.homogeneous_degree() {
                tw = Some(d as i64 + gen_twists[c]);
                break;
            }
        }
        syz_twists.push(tw.unwrap_or(0));
    }
    // sort syzygy basis by twist for the weakly-increasing invariant
    let mut perm: Vec<usize> = (0..syz.len()).collect();
    perm.sort_by_key(|&i| (syz_twists[i], i));
    let entries: Vec<Vec<Polynomial>> = (0..gens.len())
        .map(|row| perm.iter().map(|&col| syz[col][row].clone()).collect())
        .collect();
    Ok(GradedMap {
        source: GradedFreeModule {
            twists: perm.iter().map(|&i| syz_twists[i]).collect(),
        },
        target: GradedFreeModule {
            twists: gen_twists,
        },
        entries,
    })
}
