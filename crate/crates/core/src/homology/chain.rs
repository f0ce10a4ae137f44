//! Cellular chain complexes of even complexes and first homology.

use std::collections::BTreeMap;
use std::fmt;

use fixedbitset::FixedBitSet;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::gf2::Gf2Basis;
use super::matrix::IntMatrix;
use super::snf::smith_normal_form;
use crate::complex::EvenComplex;
use crate::error::{Error, Result};
use crate::graph::{Graph, Walk};

/// Coefficient ring for chains.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Ring {
    Integers,
    Z2,
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ring::Integers => f.write_str("Z"),
            Ring::Z2 => f.write_str("Z2"),
        }
    }
}

impl std::str::FromStr for Ring {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "Z" | "z" | "integers" => Ok(Ring::Integers),
            "Z2" | "z2" => Ok(Ring::Z2),
            other => Err(Error::input(format!("unknown ring `{other}` (expected Z or Z2)"))),
        }
    }
}

/// First homology as `Z^free_rank ⊕ Z/t_1 ⊕ ...`. Over `Z2` the torsion list
/// is empty and `free_rank` is the dimension of the vector space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct H1Summary {
    pub ring: Ring,
    pub free_rank: usize,
    pub torsion: Vec<BigInt>,
}

impl H1Summary {
    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    /// The group rendered without the `H1 = ` prefix.
    pub fn group(&self) -> String {
        if self.is_trivial() {
            return "0".into();
        }
        let base = match self.ring {
            Ring::Integers => "Z",
            Ring::Z2 => "Z2",
        };
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push(base.to_string()),
            r => parts.push(format!("{base}^{r}")),
        }
        parts.extend(self.torsion.iter().map(|t| format!("Z/{t}")));
        parts.join(" ⊕ ")
    }
}

impl fmt::Display for H1Summary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "H1 = {}", self.group())
    }
}

fn ensure_valid(x: &EvenComplex) -> Result<()> {
    x.ensure_valid()
}

/// Signed (integers) or parity (Z2) traversal counts of a vertex sequence.
fn traversal_vector(g: &Graph, seq: &[usize], ring: Ring) -> Result<Vec<BigInt>> {
    let mut counts = vec![0i64; g.edge_count()];
    for w in seq.windows(2) {
        let (u, v) = (w[0], w[1]);
        let e = g.edge_index(u, v).ok_or_else(|| Error::input(format!("{{{u}, {v}}} is not an edge")))?;
        counts[e] += if u < v { 1 } else { -1 };
    }
    Ok(counts
        .into_iter()
        .map(|c| match ring {
            Ring::Integers => BigInt::from(c),
            Ring::Z2 => BigInt::from(c.rem_euclid(2)),
        })
        .collect())
}

/// `∂1` and `∂2` of the complex. Edges are oriented from the lower to the
/// higher vertex id and indexed as in [`Graph::edges`]; cells index columns.
pub fn boundary_matrices(x: &EvenComplex, ring: Ring) -> Result<(IntMatrix, IntMatrix)> {
    ensure_valid(x)?;
    let g = x.skeleton();
    let mut d1 = IntMatrix::zeros(g.vertex_count(), g.edge_count());
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        match ring {
            Ring::Integers => {
                d1.set(u, e, -1);
                d1.set(v, e, 1);
            }
            Ring::Z2 => {
                d1.set(u, e, 1);
                d1.set(v, e, 1);
            }
        }
    }
    let columns = x.cells().iter().map(|c| traversal_vector(g, c, ring)).collect::<Result<Vec<_>>>()?;
    let d2 = IntMatrix::from_columns(g.edge_count(), &columns);
    debug_assert!(
        {
            let prod = d1.mul(&d2);
            match ring {
                Ring::Integers => prod.is_zero(),
                Ring::Z2 => (0..prod.rows()).all(|i| (0..prod.cols()).all(|j| prod.get(i, j).is_even())),
            }
        },
        "boundary of a boundary is nonzero"
    );
    Ok((d1, d2))
}

/// Edge-traversal vector of a walk in `g`: signed counts over the integers,
/// parities over `Z2`.
pub fn walk_chain(g: &Graph, w: &Walk, ring: Ring) -> Result<Vec<BigInt>> {
    traversal_vector(g, w.vertices(), ring)
}

/// Reduces a family of integer vectors to a basis of the lattice they span,
/// in echelon form. Zero and repeated (up to sign) vectors are dropped first.
pub fn lattice_basis(len: usize, vectors: impl IntoIterator<Item = Vec<BigInt>>) -> Vec<Vec<BigInt>> {
    let mut seen = std::collections::BTreeSet::new();
    // pivot position -> basis vector with that leading index
    let mut basis: BTreeMap<usize, Vec<BigInt>> = BTreeMap::new();
    for mut v in vectors {
        debug_assert_eq!(v.len(), len);
        let Some(lead) = v.iter().position(|x| !x.is_zero()) else { continue };
        if v[lead].is_negative() {
            v.iter_mut().for_each(|x| *x = -&*x);
        }
        if !seen.insert(v.clone()) {
            continue;
        }
        insert_into_lattice(&mut basis, v);
    }
    basis.into_values().collect()
}

fn insert_into_lattice(basis: &mut BTreeMap<usize, Vec<BigInt>>, mut v: Vec<BigInt>) {
    loop {
        let Some(p) = v.iter().position(|x| !x.is_zero()) else { return };
        let Some(b) = basis.get_mut(&p) else {
            if v[p].is_negative() {
                v.iter_mut().for_each(|x| *x = -&*x);
            }
            basis.insert(p, v);
            return;
        };
        let (bp, vp) = (b[p].clone(), v[p].clone());
        if (&vp % &bp).is_zero() {
            let q = &vp / &bp;
            for (x, y) in v.iter_mut().zip(b.iter()) {
                *x -= &q * y;
            }
            continue;
        }
        // unimodular 2x2 combination putting gcd(bp, vp) in the pivot slot
        let e = bp.extended_gcd(&vp);
        let (g, s, t) = (e.gcd, e.x, e.y);
        let (a, c) = (&vp / &g, &bp / &g);
        let new_b: Vec<BigInt> = b.iter().zip(&v).map(|(y, x)| &s * y + &t * x).collect();
        let new_v: Vec<BigInt> = b.iter().zip(&v).map(|(y, x)| &a * y - &c * x).collect();
        *b = new_b;
        if b[p].is_negative() {
            b.iter_mut().for_each(|x| *x = -&*x);
        }
        v = new_v;
    }
}

/// Precomputed data for repeated homology queries on one complex.
#[derive(Clone, Debug)]
pub struct CellularChains {
    skeleton: Graph,
    /// Lattice basis of the integer column span of `∂2`.
    boundary_basis: Vec<Vec<BigInt>>,
    z2_boundaries: Gf2Basis,
}

impl CellularChains {
    pub fn new(x: &EvenComplex) -> Result<Self> {
        ensure_valid(x)?;
        let g = x.skeleton().clone();
        let e = g.edge_count();
        let columns = x.cells().iter().map(|c| traversal_vector(&g, c, Ring::Integers)).collect::<Result<Vec<_>>>()?;
        let mut z2 = Gf2Basis::new(e);
        for col in &columns {
            z2.insert(parity_bits(col));
        }
        let boundary_basis = lattice_basis(e, columns);
        Ok(CellularChains { skeleton: g, boundary_basis, z2_boundaries: z2 })
    }

    pub fn skeleton(&self) -> &Graph {
        &self.skeleton
    }

    pub fn boundary_rank(&self) -> usize {
        self.boundary_basis.len()
    }

    pub fn boundary_basis(&self) -> &[Vec<BigInt>] {
        &self.boundary_basis
    }

    fn rank_d1(&self) -> usize {
        self.skeleton.vertex_count() - self.skeleton.component_count()
    }

    pub fn h1(&self, ring: Ring) -> H1Summary {
        let e = self.skeleton.edge_count();
        match ring {
            Ring::Integers => {
                let r = self.boundary_basis.len();
                let m = IntMatrix::from_columns(e, &self.boundary_basis);
                let snf = smith_normal_form(&m);
                H1Summary { ring, free_rank: e - self.rank_d1() - r, torsion: snf.torsion() }
            }
            Ring::Z2 => {
                H1Summary { ring, free_rank: e - self.rank_d1() - self.z2_boundaries.dim(), torsion: Vec::new() }
            }
        }
    }

    /// Whether an integer 1-chain lies in the rational span of the boundaries.
    pub fn chain_is_torsion(&self, chain: &[BigInt]) -> bool {
        let e = self.skeleton.edge_count();
        let r = self.boundary_basis.len();
        let mut cols = self.boundary_basis.clone();
        cols.push(chain.to_vec());
        IntMatrix::from_columns(e, &cols).rank() == r
    }

    pub fn is_torsion_class(&self, gamma: &Walk) -> Result<bool> {
        ensure_closed(gamma)?;
        Ok(self.chain_is_torsion(&walk_chain(&self.skeleton, gamma, Ring::Integers)?))
    }

    pub fn z2_class_nonzero(&self, gamma: &Walk) -> Result<bool> {
        ensure_closed(gamma)?;
        let chain = walk_chain(&self.skeleton, gamma, Ring::Z2)?;
        Ok(!self.z2_boundaries.contains(&parity_bits(&chain)))
    }

    /// A basis of `Z^E ∩ span_Q(∂2)`, the integer 1-chains with a nonzero
    /// multiple that bounds.
    pub fn torsion_cycle_lattice(&self) -> Vec<Vec<BigInt>> {
        let e = self.skeleton.edge_count();
        let r = self.boundary_basis.len();
        let snf = smith_normal_form(&IntMatrix::from_columns(e, &self.boundary_basis));
        (0..r).map(|j| snf.u_inv.column(j)).collect()
    }
}

fn parity_bits(v: &[BigInt]) -> FixedBitSet {
    let mut bits = FixedBitSet::with_capacity(v.len());
    for (i, x) in v.iter().enumerate() {
        if x.is_odd() {
            bits.insert(i);
        }
    }
    bits
}

fn ensure_closed(w: &Walk) -> Result<()> {
    if w.is_closed() {
        Ok(())
    } else {
        Err(Error::input(format!("walk {w} is not closed")))
    }
}

pub fn h1(x: &EvenComplex, ring: Ring) -> Result<H1Summary> {
    Ok(CellularChains::new(x)?.h1(ring))
}

/// Whether some positive multiple of `[gamma]` vanishes in `H1(x; Z)`.
pub fn is_torsion_class(x: &EvenComplex, gamma: &Walk) -> Result<bool> {
    CellularChains::new(x)?.is_torsion_class(gamma)
}

pub fn z2_class_nonzero(x: &EvenComplex, gamma: &Walk) -> Result<bool> {
    CellularChains::new(x)?.z2_class_nonzero(gamma)
}

pub fn torsion_cycle_lattice(x: &EvenComplex) -> Result<Vec<Vec<BigInt>>> {
    Ok(CellularChains::new(x)?.torsion_cycle_lattice())
}

/// Reference torsion test through a Smith normal form of the full `∂2`:
/// `gamma` is torsion iff `(U·chain)_i = 0` for every `i` past the rank.
pub fn is_torsion_class_snf(x: &EvenComplex, gamma: &Walk) -> Result<bool> {
    ensure_closed(gamma)?;
    let (_, d2) = boundary_matrices(x, Ring::Integers)?;
    let chain = walk_chain(x.skeleton(), gamma, Ring::Integers)?;
    let snf = smith_normal_form(&d2);
    let r = snf.rank();
    Ok(snf.u.mul_vec(&chain)[r..].iter().all(Zero::is_zero))
}

/// Reference H1 computed from a Smith normal form of the unreduced `∂2`.
pub fn h1_snf(x: &EvenComplex) -> Result<H1Summary> {
    let (_, d2) = boundary_matrices(x, Ring::Integers)?;
    let g = x.skeleton();
    let snf = smith_normal_form(&d2);
    let rank_d1 = g.vertex_count() - g.component_count();
    Ok(H1Summary { ring: Ring::Integers, free_rank: g.edge_count() - rank_d1 - snf.rank(), torsion: snf.torsion() })
}
