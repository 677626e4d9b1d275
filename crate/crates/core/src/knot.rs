//! Repeated gluing of catalog gadgets until a single zigzag remains.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::gadgets::{gadget_catalog, Gadget, GadgetTau};
use crate::monodromy::{find_special_pairs, z_monodromy, zigzags_through_pair, SpecialPair};
use crate::perm::{classify, ClassId, Perm4};
use crate::surgery::{connected_sum, predicted_merge_count, SpecialHomeomorphism};
use crate::zigzag::ZOriented;

/// The first special pair, in pair order, crossed by at least two zigzags,
/// with that zigzag count.
pub fn select_pair(z: &ZOriented) -> Result<(SpecialPair, usize)> {
    for p in find_special_pairs(z)? {
        let k = zigzags_through_pair(z, &p)?;
        if k >= 2 {
            return Ok((p, k));
        }
    }
    Err(Error::Selection)
}

#[derive(Clone, Copy, Debug)]
pub struct GadgetChoice {
    pub gadget: &'static Gadget,
    pub homeomorphism: SpecialHomeomorphism,
    pub tau: GadgetTau,
}

impl GadgetChoice {
    pub fn monodromy(&self) -> Perm4 {
        self.gadget.side(self.tau).monodromy
    }
}

/// The first catalog gadget, gluing and gadget orientation that merge every
/// zigzag through a pair with monodromy `mp` into one.
pub fn select_gadget(mp: Perm4) -> Result<GadgetChoice> {
    for gadget in gadget_catalog()? {
        for homeomorphism in SpecialHomeomorphism::BOTH {
            for tau in GadgetTau::BOTH {
                if predicted_merge_count(mp, gadget.side(tau).monodromy, homeomorphism) == 1 {
                    return Ok(GadgetChoice {
                        gadget,
                        homeomorphism,
                        tau,
                    });
                }
            }
        }
    }
    Err(Error::GadgetSearch(mp.to_string()))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub vertices: usize,
    pub edges: usize,
    pub faces: usize,
    pub euler_characteristic: i64,
    pub orientable: bool,
    pub zigzags: usize,
    pub homogeneous: bool,
}

impl Summary {
    pub fn of(z: &ZOriented) -> Self {
        let c = z.complex();
        Summary {
            vertices: c.num_vertices(),
            edges: c.num_edges(),
            faces: c.num_faces(),
            euler_characteristic: c.euler_characteristic(),
            orientable: c.is_orientable(),
            zigzags: z.zigzag_count(),
            homogeneous: z.is_homogeneous(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KnotStep {
    pub step: usize,
    pub pair: String,
    pub monodromy: Perm4,
    pub class: ClassId,
    pub gadget: String,
    pub gadget_pair: String,
    pub gadget_monodromy: Perm4,
    pub homeomorphism: SpecialHomeomorphism,
    pub gadget_tau: GadgetTau,
    pub zigzags_before: usize,
    pub zigzags_after: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KnottingTrace {
    pub initial: Summary,
    pub steps: Vec<KnotStep>,
    #[serde(rename = "final")]
    pub final_summary: Summary,
}

/// Glues gadgets onto `z` until it is z-knotted.
pub fn knot(z: ZOriented) -> Result<(ZOriented, KnottingTrace)> {
    z.require_homogeneous()?;
    let initial = Summary::of(&z);
    let mut z = z;
    let mut steps = Vec::new();
    while z.zigzag_count() > 1 {
        let step = steps.len() + 1;
        let before = z.zigzag_count();
        let (pair, _) = select_pair(&z)?;
        let mp = z_monodromy(&z, &pair)?;
        let choice = select_gadget(mp)?;
        let side = choice.gadget.side(choice.tau);
        let sum = connected_sum(
            &z,
            &pair,
            &side.oriented,
            &side.pair,
            choice.homeomorphism,
            step,
        )?;
        let after = sum.oriented.zigzag_count();
        if after >= before {
            return Err(Error::LoopGuard {
                step,
                before,
                after,
            });
        }
        steps.push(KnotStep {
            step,
            pair: pair.label(z.complex()),
            monodromy: mp,
            class: classify(mp),
            gadget: choice.gadget.name.clone(),
            gadget_pair: side.pair.label(side.oriented.complex()),
            gadget_monodromy: side.monodromy,
            homeomorphism: choice.homeomorphism,
            gadget_tau: choice.tau,
            zigzags_before: before,
            zigzags_after: after,
        });
        z = sum.oriented;
    }
    let final_summary = Summary::of(&z);
    Ok((
        z,
        KnottingTrace {
            initial,
            steps,
            final_summary,
        },
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gadgets::oriented_bipyramid;

    #[test]
    fn knotted_input_is_untouched() {
        let z = oriented_bipyramid(5).unwrap();
        let (out, trace) = knot(z.clone()).unwrap();
        assert!(trace.steps.is_empty());
        assert_eq!(out.complex(), z.complex());
        assert!(matches!(select_pair(&z), Err(Error::Selection)));
    }

    #[test]
    fn bp6_needs_one_step() {
        let (out, trace) = knot(oriented_bipyramid(6).unwrap()).unwrap();
        assert_eq!(trace.steps.len(), 1);
        assert_eq!(out.zigzag_count(), 1);
        assert_eq!(trace.steps[0].class.index(), 0);
    }

    #[test]
    fn gadget_search_examples() {
        let p = |s: &str| s.parse::<Perm4>().unwrap();
        for mp in ["(13)(24)", "(234)", "id"] {
            let ch = select_gadget(p(mp)).unwrap();
            let g = ch.homeomorphism.as_perm();
            assert!(
                (g.inverse() * ch.monodromy() * g * p(mp)).is_four_cycle(),
                "{mp}"
            );
        }
    }
}
