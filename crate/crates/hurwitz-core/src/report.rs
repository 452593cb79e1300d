//! Machine-readable computation reports. Field names are a stable
//! interface, versioned by the `schema` field; genus-bound results carry
//! the bound in `bound` and never populate `genus`.

use serde::Serialize;

use crate::plane_curve::SimpleBranchingGenus;
use crate::riemann_hurwitz::KowalewskiGenus;
use crate::superelliptic::RamificationProfile;

pub const SCHEMA_VERSION: u32 = 1;

pub const NEWTON_BOUND_WARNING: &str =
    "newton-bound is an upper bound only, not a certified genus";

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    Superelliptic,
    NewtonBound,
    SimpleBranching,
    RiemannHurwitz,
    Kowalewski,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct Certificate {
    pub name: String,
    pub value: String,
}

impl Certificate {
    pub fn new(name: &str, value: impl ToString) -> Certificate {
        Certificate {
            name: name.to_string(),
            value: value.to_string(),
        }
    }
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct ProfileEntryReport {
    pub base: String,
    pub base_weight: usize,
    pub points_per_root: u32,
    pub index_per_point: u32,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct ProfileReport {
    pub sheets: u32,
    pub total_index: i64,
    pub entries: Vec<ProfileEntryReport>,
}

impl ProfileReport {
    pub fn from_profile(profile: &RamificationProfile) -> ProfileReport {
        ProfileReport {
            sheets: profile.sheets,
            total_index: profile.total_index,
            entries: profile
                .entries
                .iter()
                .map(|e| ProfileEntryReport {
                    base: e.locus.to_string(),
                    base_weight: e.base_weight,
                    points_per_root: e.points_per_root,
                    index_per_point: e.index_per_point,
                })
                .collect(),
        }
    }
}

/// Structured result of a genus computation. `genus` is only set when
/// the method certifies the genus; polygon results set `bound` instead.
#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct GenusReport {
    pub schema: u32,
    pub input: String,
    pub method: Method,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub genus: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bound: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub profile: Option<ProfileReport>,
    pub warnings: Vec<String>,
    pub certificates: Vec<Certificate>,
}

impl GenusReport {
    pub fn superelliptic(
        input: &str,
        genus: i64,
        profile: &RamificationProfile,
    ) -> GenusReport {
        GenusReport {
            schema: SCHEMA_VERSION,
            input: input.to_string(),
            method: Method::Superelliptic,
            genus: Some(genus),
            bound: None,
            profile: Some(ProfileReport::from_profile(profile)),
            warnings: Vec::new(),
            certificates: vec![Certificate::new("geometric_irreducibility", "true")],
        }
    }

    pub fn newton_bound(input: &str, bound: i64, vertex_count: usize) -> GenusReport {
        GenusReport {
            schema: SCHEMA_VERSION,
            input: input.to_string(),
            method: Method::NewtonBound,
            genus: None,
            bound: Some(bound),
            profile: None,
            warnings: vec![NEWTON_BOUND_WARNING.to_string()],
            certificates: vec![Certificate::new("hull_vertices", vertex_count)],
        }
    }

    pub fn simple_branching(input: &str, result: &SimpleBranchingGenus) -> GenusReport {
        GenusReport {
            schema: SCHEMA_VERSION,
            input: input.to_string(),
            method: Method::SimpleBranching,
            genus: Some(result.genus),
            bound: None,
            profile: None,
            warnings: Vec::new(),
            certificates: vec![
                Certificate::new("sheets", result.sheets),
                Certificate::new("discriminant_degree", result.discriminant_degree),
                Certificate::new("discriminant_squarefree", "true"),
                Certificate::new("infinity_index", result.infinity_index),
                Certificate::new("total_index", result.total_index),
            ],
        }
    }

    pub fn riemann_hurwitz(input: &str, data: &crate::CoveringData, genus: i64) -> GenusReport {
        GenusReport {
            schema: SCHEMA_VERSION,
            input: input.to_string(),
            method: Method::RiemannHurwitz,
            genus: Some(genus),
            bound: None,
            profile: None,
            warnings: Vec::new(),
            certificates: vec![
                Certificate::new("sheets", data.sheets()),
                Certificate::new("base_genus", data.base_genus()),
                Certificate::new("total_index", data.total_index()),
            ],
        }
    }

    pub fn kowalewski(input: &str, result: &KowalewskiGenus) -> GenusReport {
        GenusReport {
            schema: SCHEMA_VERSION,
            input: input.to_string(),
            method: Method::Kowalewski,
            genus: Some(result.genus),
            bound: None,
            profile: None,
            warnings: Vec::new(),
            certificates: vec![
                Certificate::new("quotient_rhs", &result.quotient_rhs),
                Certificate::new("quotient_squarefree", "true"),
                Certificate::new("base_genus", result.base_genus),
                Certificate::new("branch_poly", &result.branch_poly),
                Certificate::new("branch_poly_squarefree", "true"),
                Certificate::new("branch_count", result.branch_count),
            ],
        }
    }
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct DivisorReport {
    pub schema: u32,
    pub input: String,
    pub divisor: String,
    pub degree: i64,
    pub effective: bool,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct PrincipalDivisorReport {
    pub schema: u32,
    pub input: String,
    pub divisor: String,
    pub degree: i64,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct LSpaceReport {
    pub schema: u32,
    pub input: String,
    pub divisor: String,
    pub degree: i64,
    pub dimension: usize,
    pub basis: Vec<String>,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct RiemannRochReport {
    pub schema: u32,
    pub input: String,
    pub divisor: String,
    pub degree: i64,
    pub genus: u32,
    pub dim_l_d: usize,
    pub dim_l_k_minus_d: usize,
    pub lhs: i64,
    pub rhs: i64,
    pub ok: bool,
}
