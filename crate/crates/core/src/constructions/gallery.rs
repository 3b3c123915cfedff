//! Named example hypergroups.

use crate::any::AnyHypergroup;

use super::{double_coset_hypergroup, group_as_hypergroup, two_element_labeled, ConstructionError, FiniteGroup};

pub const GALLERY_NAMES: [&str; 8] =
    ["z2", "z3", "s3", "klein", "k_sqrt3", "s3_mod_z2", "s4_mod_s3", "product_demo"];

#[derive(Debug, Clone)]
pub struct GalleryEntry {
    pub name: &'static str,
    pub description: &'static str,
    pub hypergroup: AnyHypergroup,
}

/// `2 + √3`, the weight of the nontrivial element of `k_sqrt3`.
pub fn two_plus_sqrt3() -> f64 {
    2.0 + 3f64.sqrt()
}

fn s3_mod_z2() -> AnyHypergroup {
    let g = FiniteGroup::symmetric(3);
    let h = g.subgroup_from_labels(&["e", "(12)"]).expect("{e,(12)} is a subgroup");
    double_coset_hypergroup(&g, &h).expect("double cosets").0.into()
}

fn s4_mod_s3() -> AnyHypergroup {
    let g = FiniteGroup::symmetric(4);
    let perms = g.permutations().expect("permutation group");
    let stabilizer: Vec<usize> = (0..g.order()).filter(|&i| perms[i].apply(3) == 3).collect();
    double_coset_hypergroup(&g, &stabilizer).expect("double cosets").0.into()
}

fn k_sqrt3() -> AnyHypergroup {
    two_element_labeled(two_plus_sqrt3(), "x").expect("2+√3 >= 1").into()
}

/// Looks up a gallery instance by name.
pub fn gallery(name: &str) -> Result<GalleryEntry, ConstructionError> {
    let (name, description, hypergroup): (&'static str, &'static str, AnyHypergroup) = match name {
        "z2" => ("z2", "cyclic group Z2 as a hypergroup", group_as_hypergroup(&FiniteGroup::cyclic(2)).into()),
        "z3" => ("z3", "cyclic group Z3 as a hypergroup", group_as_hypergroup(&FiniteGroup::cyclic(3)).into()),
        "s3" => (
            "s3",
            "symmetric group S3 as a (non-commutative) hypergroup",
            group_as_hypergroup(&FiniteGroup::symmetric(3)).into(),
        ),
        "klein" => (
            "klein",
            "Klein four-group Z2 x Z2 as a hypergroup",
            group_as_hypergroup(&FiniteGroup::klein_four()).into(),
        ),
        "k_sqrt3" => (
            "k_sqrt3",
            "two-point hypergroup K_{e,x,2+sqrt3} of the conformal inclusion LSU(2)_10 in LSpin(5)_1 (index 3+sqrt3)",
            k_sqrt3(),
        ),
        "s3_mod_z2" => ("s3_mod_z2", "double coset hypergroup S3//{e,(12)}", s3_mod_z2()),
        "s4_mod_s3" => ("s4_mod_s3", "double coset hypergroup S4//S3 (point stabilizer)", s4_mod_s3()),
        "product_demo" => (
            "product_demo",
            "direct product K_{e,x,2+sqrt3} x S3//{e,(12)}",
            k_sqrt3().product(&s3_mod_z2()),
        ),
        other => return Err(ConstructionError::UnknownGalleryName(other.to_string())),
    };
    Ok(GalleryEntry { name, description, hypergroup })
}
