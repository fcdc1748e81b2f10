//! Regions, the signature screen, exceptional families and the final report.

use serde::Serialize;

use super::{classify_bprime, require_crushtacean, BPrimeVerdict};
use crate::automorphism::{automorphisms, find_isomorphism};
use crate::error::{Error, Result};
use crate::families::{cycle_expand, gamma_borromean, gamma_pretzel, ochain_graph};
use crate::graph::{faces, is_k_connected, planar_embed, PaintedGraph, RotationSystem};
use crate::permgroup::{identify, GroupId};

/// Whether some face shares an edge with every other face.
pub fn has_universal_region(g: &PaintedGraph, rot: &RotationSystem) -> Result<bool> {
    let fs = faces(g, rot)?;
    let others = fs.len() - 1;
    Ok(fs.adjacency().iter().any(|adj| adj.len() == others))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SignatureScreen {
    /// The link built from the cycle expansion of the seed is certainly not
    /// a signature link.
    NotSignature,
    /// The necessary condition holds; nothing is decided.
    Inconclusive,
}

/// A signature link needs a seed region adjacent to all others, so its
/// absence certifies the expansion is not a signature link.
pub fn signature_screen(seed: &PaintedGraph, rot: &RotationSystem) -> Result<SignatureScreen> {
    Ok(if has_universal_region(seed, rot)? {
        SignatureScreen::Inconclusive
    } else {
        SignatureScreen::NotSignature
    })
}

/// Number of reflection surfaces of the link complement, by family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum ReflectionMultiplicity {
    Unique,
    Borromean,
    Pretzel { n: usize },
    OChain { n: usize },
}

impl ReflectionMultiplicity {
    pub fn surfaces(&self) -> usize {
        match self {
            ReflectionMultiplicity::Unique => 1,
            ReflectionMultiplicity::Borromean => 3,
            ReflectionMultiplicity::Pretzel { .. } | ReflectionMultiplicity::OChain { .. } => 2,
        }
    }
}

/// Matches `g` against the only crushtaceans whose links have more than one
/// reflection surface: the Borromean graph, prisms with vertical paint and
/// the O-chain graphs.
pub fn detect_reflection_multiplicity(g: &PaintedGraph) -> Result<ReflectionMultiplicity> {
    require_crushtacean(g)?;
    let v = g.vertex_count();
    if v == 4 && find_isomorphism(g, &gamma_borromean(), true).is_some() {
        return Ok(ReflectionMultiplicity::Borromean);
    }
    if v.is_multiple_of(2) && v / 2 >= 3 {
        let n = v / 2;
        if find_isomorphism(g, &gamma_pretzel(n)?, true).is_some() {
            return Ok(ReflectionMultiplicity::Pretzel { n });
        }
    }
    if v.is_multiple_of(2) && v >= 6 {
        let n = (v - 2) / 2;
        if find_isomorphism(g, &ochain_graph(n)?, true).is_some() {
            return Ok(ReflectionMultiplicity::OChain { n });
        }
    }
    Ok(ReflectionMultiplicity::Unique)
}

/// An orientation-preserving symmetry group as far as it is determined.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum SymmetryGroup {
    Exact {
        group: GroupId,
        order: usize,
        basis: String,
    },
    /// Known order, isomorphism type outside the catalog.
    OrderOnly { order: usize, basis: String },
    /// The group contains a subgroup of this type.
    LowerBound {
        group: GroupId,
        order: usize,
        basis: String,
    },
    Unknown { basis: String },
}

impl SymmetryGroup {
    pub fn order(&self) -> Option<usize> {
        match self {
            SymmetryGroup::Exact { order, .. } | SymmetryGroup::OrderOnly { order, .. } => {
                Some(*order)
            }
            _ => None,
        }
    }

    pub fn group(&self) -> Option<GroupId> {
        match self {
            SymmetryGroup::Exact { group, .. } => Some(*group),
            _ => None,
        }
    }
}

/// Everything known about the symmetries of the link encoded by a crushtacean.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassificationReport {
    pub crushtacean_valid: bool,
    pub vertex_count: usize,
    pub painted_count: usize,
    pub aut_order: usize,
    pub aut_p_order: usize,
    pub aut_p_group: GroupId,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub aut_p_alias: Option<String>,
    pub b_prime: BPrimeVerdict,
    /// Set when the b-prime verdict depends on leaving vertex-star cuts out
    /// of the cut criterion.
    pub b_prime_excludes_trivial_cuts: bool,
    pub reflection: ReflectionMultiplicity,
    pub reflection_surfaces: usize,
    pub signature_screen: SignatureScreen,
    /// Sym+(S^3, L).
    pub sym_plus_link: SymmetryGroup,
    /// Sym+(S^3 \ L).
    pub sym_plus_complement: SymmetryGroup,
    /// `|Sym+(S^3, L)| / |Aut_p|` when the link group is determined.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub link_index_over_aut_p: Option<usize>,
}

/// Orientation-preserving group of order `8n` for the prism and O-chain
/// families: `D_2n x Z_2` for even `n`, `D_4n` for odd `n`.
fn family_group(n: usize) -> GroupId {
    if n.is_multiple_of(2) {
        GroupId::dihedral_times_z2(2 * n)
    } else {
        GroupId::dihedral(4 * n)
    }
}

/// Classifies a crushtacean. `seed`, when given, must be a graph whose cycle
/// expansion (original edges painted) is `g`; it enables the signature
/// screen and with it the complement group in the generic case.
pub fn symmetry_report(g: &PaintedGraph, seed: Option<&PaintedGraph>) -> Result<ClassificationReport> {
    require_crushtacean(g)?;
    let aut = automorphisms(g, false)?;
    let aut_p = automorphisms(g, true)?;
    let aut_p_group = identify(&aut_p);
    let b_prime = classify_bprime(g)?;
    let reflection = detect_reflection_multiplicity(g)?;

    let screen = match seed {
        None => SignatureScreen::Inconclusive,
        Some(s) => {
            if !is_k_connected(s, 3)? {
                return Err(Error::ProvenanceMismatch);
            }
            let rot = planar_embed(s).map_err(|_| Error::ProvenanceMismatch)?;
            let (expanded, _) = cycle_expand(s, &rot)?;
            if find_isomorphism(g, &expanded, true).is_none() {
                return Err(Error::ProvenanceMismatch);
            }
            signature_screen(s, &rot)?
        }
    };

    let same = |sg: &SymmetryGroup| sg.clone();
    let (link, complement) = match reflection {
        ReflectionMultiplicity::Borromean => {
            let link = SymmetryGroup::Exact {
                group: GroupId::S4,
                order: 24,
                basis: "borromean-rings".into(),
            };
            (link.clone(), same(&link))
        }
        ReflectionMultiplicity::Pretzel { n } => {
            let link = SymmetryGroup::Exact {
                group: family_group(n),
                order: 8 * n,
                basis: "pretzel-family".into(),
            };
            let complement = if n == 3 {
                SymmetryGroup::OrderOnly {
                    order: 96,
                    basis: "pretzel-family-n3-complement".into(),
                }
            } else {
                same(&link)
            };
            (link, complement)
        }
        ReflectionMultiplicity::OChain { n } => {
            let link = SymmetryGroup::Exact {
                group: family_group(n),
                order: 8 * n,
                basis: "ochain-family".into(),
            };
            (link.clone(), same(&link))
        }
        ReflectionMultiplicity::Unique => match b_prime {
            BPrimeVerdict::BPrime => {
                let link = SymmetryGroup::Exact {
                    group: aut_p_group,
                    order: aut_p.order(),
                    basis: "painted-automorphisms".into(),
                };
                let complement = if screen == SignatureScreen::NotSignature {
                    SymmetryGroup::Exact {
                        group: aut_p_group,
                        order: aut_p.order(),
                        basis: "painted-automorphisms-not-signature".into(),
                    }
                } else {
                    SymmetryGroup::Unknown {
                        basis: if seed.is_some() {
                            "signature-screen-inconclusive".into()
                        } else {
                            "no-expansion-seed".into()
                        },
                    }
                };
                (link, complement)
            }
            _ => (
                SymmetryGroup::LowerBound {
                    group: aut_p_group,
                    order: aut_p.order(),
                    basis: "painted-automorphisms-embed".into(),
                },
                SymmetryGroup::Unknown {
                    basis: "b-composite".into(),
                },
            ),
        },
    };

    let link_index_over_aut_p = link.order().map(|o| o / aut_p.order());
    Ok(ClassificationReport {
        crushtacean_valid: true,
        vertex_count: g.vertex_count(),
        painted_count: g.painted().len(),
        aut_order: aut.order(),
        aut_p_order: aut_p.order(),
        aut_p_group,
        aut_p_alias: aut_p_group.geometric_alias(),
        b_prime_excludes_trivial_cuts: b_prime == BPrimeVerdict::BPrime,
        b_prime,
        reflection,
        reflection_surfaces: reflection.surfaces(),
        signature_screen: screen,
        sym_plus_link: link,
        sym_plus_complement: complement,
        link_index_over_aut_p,
    })
}
