//! Abstract isomorphism types of the finite subgroups of O(3).

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{PermGroup, Permutation};
use crate::error::{Error, Result};

/// Isomorphism type of a finite subgroup of O(3).
///
/// Abstractly isomorphic entries have a single canonical tag: `Z_n x Z_2`
/// with `n` odd is `Cyclic(2n)`, `D_n x Z_2` with `n` odd is `Dihedral(2n)`,
/// and the order-4 non-cyclic group is always `Klein`. Use the lowercase
/// constructors to get canonical tags.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GroupId {
    Trivial,
    /// `Z_n`, `n >= 2`.
    Cyclic(usize),
    /// `Z_2 x Z_2`.
    Klein,
    /// `D_n` of order `2n`, `n >= 3`.
    Dihedral(usize),
    /// `Z_n x Z_2`, `n` even, `n >= 4`.
    CyclicTimesZ2(usize),
    /// `D_n x Z_2` of order `4n`, `n` even.
    DihedralTimesZ2(usize),
    A4,
    S4,
    A5,
    A4xZ2,
    S4xZ2,
    A5xZ2,
    Unrecognized(usize),
}

impl GroupId {
    pub fn cyclic(n: usize) -> GroupId {
        match n {
            0 | 1 => GroupId::Trivial,
            _ => GroupId::Cyclic(n),
        }
    }

    pub fn dihedral(n: usize) -> GroupId {
        match n {
            0 | 1 => GroupId::cyclic(2 * n.max(1)),
            2 => GroupId::Klein,
            _ => GroupId::Dihedral(n),
        }
    }

    pub fn cyclic_times_z2(n: usize) -> GroupId {
        match n {
            0 | 1 => GroupId::Cyclic(2),
            2 => GroupId::Klein,
            _ if n % 2 == 1 => GroupId::Cyclic(2 * n),
            _ => GroupId::CyclicTimesZ2(n),
        }
    }

    pub fn dihedral_times_z2(n: usize) -> GroupId {
        match n {
            0 | 1 => GroupId::Klein,
            _ if n % 2 == 1 => GroupId::Dihedral(2 * n),
            _ => GroupId::DihedralTimesZ2(n),
        }
    }

    pub fn order(&self) -> usize {
        match *self {
            GroupId::Trivial => 1,
            GroupId::Cyclic(n) => n,
            GroupId::Klein => 4,
            GroupId::Dihedral(n) => 2 * n,
            GroupId::CyclicTimesZ2(n) => 2 * n,
            GroupId::DihedralTimesZ2(n) => 4 * n,
            GroupId::A4 => 12,
            GroupId::S4 => 24,
            GroupId::A5 => 60,
            GroupId::A4xZ2 => 24,
            GroupId::S4xZ2 => 48,
            GroupId::A5xZ2 => 120,
            GroupId::Unrecognized(n) => n,
        }
    }

    /// Whether this is the canonical tag for its isomorphism type.
    pub fn is_canonical(&self) -> bool {
        match *self {
            GroupId::Cyclic(n) => n >= 2,
            GroupId::Dihedral(n) => n >= 3,
            GroupId::CyclicTimesZ2(n) => n >= 4 && n % 2 == 0,
            GroupId::DihedralTimesZ2(n) => n >= 2 && n % 2 == 0,
            _ => true,
        }
    }

    /// Polyhedra whose symmetry group has this type.
    pub fn geometric_alias(&self) -> Option<String> {
        Some(match *self {
            GroupId::Trivial | GroupId::Unrecognized(_) | GroupId::CyclicTimesZ2(_) => {
                return None
            }
            GroupId::Cyclic(n) => format!("{n}-gonal pyramid, rotations only"),
            GroupId::Klein => "rhombic disphenoid".to_string(),
            GroupId::Dihedral(n) => {
                let mut names = vec![format!("{n}-gonal pyramid")];
                if n % 2 == 0 && n >= 6 {
                    let h = n / 2;
                    if h % 2 == 1 {
                        names.push(format!("{h}-gonal prism"));
                    } else {
                        names.push(format!("{h}-gonal antiprism"));
                    }
                }
                names.join(" / ")
            }
            GroupId::DihedralTimesZ2(n) => {
                if n % 2 == 0 && n >= 4 {
                    format!("{n}-gonal prism")
                } else {
                    return None;
                }
            }
            GroupId::A4 => "regular tetrahedron, rotations only".to_string(),
            GroupId::S4 => "cube, rotations only; regular tetrahedron".to_string(),
            GroupId::A5 => "dodecahedron, rotations only".to_string(),
            GroupId::A4xZ2 => "pyritohedron".to_string(),
            GroupId::S4xZ2 => "cube".to_string(),
            GroupId::A5xZ2 => "dodecahedron".to_string(),
        })
    }

    /// Canonical catalog tags of the given order.
    pub fn candidates(order: usize) -> Vec<GroupId> {
        let mut out = Vec::new();
        if order == 1 {
            out.push(GroupId::Trivial);
            return out;
        }
        if order == 0 {
            return out;
        }
        out.push(GroupId::Cyclic(order));
        if order == 4 {
            out.push(GroupId::Klein);
        }
        if order.is_multiple_of(2) && order / 2 >= 3 {
            out.push(GroupId::Dihedral(order / 2));
        }
        if order.is_multiple_of(4) && order / 2 >= 4 {
            out.push(GroupId::CyclicTimesZ2(order / 2));
        }
        if order.is_multiple_of(8) {
            out.push(GroupId::DihedralTimesZ2(order / 4));
        }
        for id in [
            GroupId::A4,
            GroupId::S4,
            GroupId::A5,
            GroupId::A4xZ2,
            GroupId::S4xZ2,
            GroupId::A5xZ2,
        ] {
            if id.order() == order {
                out.push(id);
            }
        }
        out
    }

    /// A concrete permutation group of this type (`None` for `Unrecognized`).
    pub fn realize(&self) -> Option<PermGroup> {
        let (degree, gens): (usize, Vec<Vec<Vec<usize>>>) = match *self {
            GroupId::Trivial => (1, vec![]),
            GroupId::Cyclic(n) => (n, vec![vec![(0..n).collect()]]),
            GroupId::Klein => (4, vec![vec![vec![0, 1], vec![2, 3]], vec![vec![0, 2], vec![1, 3]]]),
            GroupId::Dihedral(n) => (n, dihedral_gens(n)),
            GroupId::CyclicTimesZ2(n) => (n + 2, vec![vec![(0..n).collect()], vec![vec![n, n + 1]]]),
            GroupId::DihedralTimesZ2(n) => {
                let (d, mut gens) = if n == 2 {
                    (4, vec![vec![vec![0, 1], vec![2, 3]], vec![vec![0, 2], vec![1, 3]]])
                } else {
                    (n, dihedral_gens(n))
                };
                gens.push(vec![vec![d, d + 1]]);
                (d + 2, gens)
            }
            GroupId::A4 => (4, vec![vec![vec![0, 1, 2]], vec![vec![0, 1], vec![2, 3]]]),
            GroupId::S4 => (4, vec![vec![vec![0, 1]], vec![vec![0, 1, 2, 3]]]),
            GroupId::A5 => (5, vec![vec![vec![0, 1, 2, 3, 4]], vec![vec![0, 1, 2]]]),
            GroupId::A4xZ2 => (6, vec![vec![vec![0, 1, 2]], vec![vec![0, 1], vec![2, 3]], vec![vec![4, 5]]]),
            GroupId::S4xZ2 => (6, vec![vec![vec![0, 1]], vec![vec![0, 1, 2, 3]], vec![vec![4, 5]]]),
            GroupId::A5xZ2 => (7, vec![vec![vec![0, 1, 2, 3, 4]], vec![vec![0, 1, 2]], vec![vec![5, 6]]]),
            GroupId::Unrecognized(_) => return None,
        };
        let perms: Vec<Permutation> = gens
            .iter()
            .map(|cycles| {
                let refs: Vec<&[usize]> = cycles.iter().map(Vec::as_slice).collect();
                Permutation::from_cycles(degree, &refs).expect("catalog generators are valid")
            })
            .collect();
        Some(PermGroup::close(degree, &perms).expect("catalog groups are small"))
    }
}

fn dihedral_gens(n: usize) -> Vec<Vec<Vec<usize>>> {
    let rotation = (0..n).collect();
    // i -> -i mod n
    let reflection = (1..=(n - 1) / 2).map(|i| vec![i, n - i]).collect();
    vec![vec![rotation], reflection]
}

/// The catalog tag abstractly isomorphic to `g`, or `Unrecognized(order)`.
///
/// Candidates of the right order are realized concretely and compared by
/// [`PermGroup::signature`].
pub fn identify(g: &PermGroup) -> GroupId {
    let sig = g.signature();
    GroupId::candidates(g.order())
        .into_iter()
        .find(|id| {
            id.realize()
                .map(|r| r.signature() == sig)
                .unwrap_or(false)
        })
        .unwrap_or(GroupId::Unrecognized(g.order()))
}

impl fmt::Display for GroupId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            GroupId::Trivial => write!(f, "1"),
            GroupId::Cyclic(n) => write!(f, "Z{n}"),
            GroupId::Klein => write!(f, "Z2xZ2"),
            GroupId::Dihedral(n) => write!(f, "D{n}"),
            GroupId::CyclicTimesZ2(n) => write!(f, "Z{n}xZ2"),
            GroupId::DihedralTimesZ2(n) => write!(f, "D{n}xZ2"),
            GroupId::A4 => write!(f, "A4"),
            GroupId::S4 => write!(f, "S4"),
            GroupId::A5 => write!(f, "A5"),
            GroupId::A4xZ2 => write!(f, "A4xZ2"),
            GroupId::S4xZ2 => write!(f, "S4xZ2"),
            GroupId::A5xZ2 => write!(f, "A5xZ2"),
            GroupId::Unrecognized(n) => write!(f, "unrecognized({n})"),
        }
    }
}

/// Parses the strings produced by `Display`, returning canonical tags
/// (`"D5xZ2"` parses as `D10`).
impl FromStr for GroupId {
    type Err = Error;

    fn from_str(s: &str) -> Result<GroupId> {
        let bad = || Error::UnknownGroupId(s.to_string());
        let t = s.trim();
        let num = |x: &str| x.parse::<usize>().ok().filter(|&n| n >= 1);
        let id = match t {
            "1" | "Z1" => GroupId::Trivial,
            "A4" => GroupId::A4,
            "S4" => GroupId::S4,
            "A5" => GroupId::A5,
            "A4xZ2" => GroupId::A4xZ2,
            "S4xZ2" => GroupId::S4xZ2,
            "A5xZ2" => GroupId::A5xZ2,
            _ => {
                if let Some(inner) = t
                    .strip_prefix("unrecognized(")
                    .and_then(|x| x.strip_suffix(')'))
                {
                    GroupId::Unrecognized(num(inner).ok_or_else(bad)?)
                } else if let Some(base) = t.strip_suffix("xZ2") {
                    if let Some(n) = base.strip_prefix('Z') {
                        GroupId::cyclic_times_z2(num(n).ok_or_else(bad)?)
                    } else if let Some(n) = base.strip_prefix('D') {
                        GroupId::dihedral_times_z2(num(n).ok_or_else(bad)?)
                    } else {
                        return Err(bad());
                    }
                } else if let Some(n) = t.strip_prefix('Z') {
                    GroupId::cyclic(num(n).ok_or_else(bad)?)
                } else if let Some(n) = t.strip_prefix('D') {
                    GroupId::dihedral(num(n).ok_or_else(bad)?)
                } else {
                    return Err(bad());
                }
            }
        };
        Ok(id)
    }
}

impl Serialize for GroupId {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for GroupId {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
