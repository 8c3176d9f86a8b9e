//! Localization and twisting along `f = E_{σ⁻¹(2),σ⁻¹(1)}` as graph surgery.
//!
//! In the twisted picture `f` lowers the corner entry `l_{11}` by one.
//! Localizing removes every arrow between rows 1 and 2; the twisted variant
//! also moves the corner entry by `z`; the twisting functor moves it by one
//! and takes the full graph of the new seed.

use crate::graph::{GtGraph, Vertex};
use crate::scalars::{diff_at_least, Field};
use crate::sigma::Permutation;
use crate::tableau::Tableau;
use crate::weights::{self, is_simple_realization, WeightError};
use crate::Rational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LocalizationError {
    #[error("localization needs rank at least 2")]
    Rank,
    #[error(
        "f does not act injectively: the corner entry exceeds a row-2 entry by a positive integer"
    )]
    NotInjective,
    #[error(
        "f acts surjectively on the seed: shifting the corner entry up stays inside the module"
    )]
    Surjective,
    #[error("seed tableau is not a realization of the graph")]
    NotRealization,
    #[error("graph is not a relation graph")]
    NotRelationGraph,
    #[error(transparent)]
    Weight(#[from] WeightError),
}

/// A relation module `V_G(T)` twisted by `σ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModuleSpec<S = Rational> {
    pub seed: Tableau<S>,
    pub graph: GtGraph,
    pub sigma: Permutation,
}

impl<S: Field> ModuleSpec<S> {
    /// The simple highest weight module of a σ-relation weight, realized on
    /// the row-normalized `T_σ(σ⁻¹(λ+℘))` and its graph.
    pub fn highest_weight(lambda: &[S], sigma: &Permutation) -> Result<Self, LocalizationError> {
        if let Err(obstruction) = weights::relation_verdict(lambda, sigma)? {
            return Err(WeightError::NotSigmaRelation {
                sigma: sigma.to_string(),
                obstruction,
            }
            .into());
        }
        let (seed, _) = weights::sigma_tableau(lambda, sigma).normalize_rows();
        let graph = seed.graph();
        Ok(ModuleSpec {
            seed,
            graph,
            sigma: sigma.clone(),
        })
    }

    /// Seed is a realization and the graph a relation graph.
    pub fn validate(&self) -> Result<(), LocalizationError> {
        if !self.seed.is_realization(&self.graph) {
            return Err(LocalizationError::NotRealization);
        }
        if self.graph.relation_check().is_err() {
            return Err(LocalizationError::NotRelationGraph);
        }
        Ok(())
    }

    fn corner_gaps(&self) -> Result<[bool; 2], LocalizationError> {
        if self.seed.n() < 2 {
            return Err(LocalizationError::Rank);
        }
        let corner = self.seed.entry(Vertex::new(1, 1));
        Ok([1, 2].map(|i| diff_at_least(corner, self.seed.entry(Vertex::new(2, i)), 1)))
    }

    /// `v_{11} - v_{21} ∉ ℤ_{>0}` and `v_{11} - v_{22} ∉ ℤ_{>0}` on the seed.
    pub fn f_acts_injectively(&self) -> Result<bool, LocalizationError> {
        Ok(self.corner_gaps()?.iter().all(|&positive| !positive))
    }

    /// The same seed on the graph without arrows between rows 1 and 2.
    pub fn localize(&self) -> Result<Self, LocalizationError> {
        if !self.f_acts_injectively()? {
            return Err(LocalizationError::NotInjective);
        }
        let graph = self
            .graph
            .filter_arrows(|(a, b)| !(a.row.min(b.row) == 1 && a.row.max(b.row) == 2));
        Ok(ModuleSpec {
            seed: self.seed.clone(),
            graph,
            sigma: self.sigma.clone(),
        })
    }

    /// Localizes, then adds `z` to the corner entry of the seed. The graph
    /// stays the localized one whatever `z` is.
    pub fn twisted_localize(&self, z: &S) -> Result<Self, LocalizationError> {
        let localized = self.localize()?;
        let corner = Vertex::new(1, 1);
        let seed = localized
            .seed
            .with_entry(corner, localized.seed.entry(corner).clone() + z.clone());
        Ok(ModuleSpec { seed, ..localized })
    }

    /// The quotient of the localization by the module: the corner entry moves
    /// up by one and the graph becomes the full graph of the new seed.
    pub fn twisting_functor(&self) -> Result<Self, LocalizationError> {
        if !self.f_acts_injectively()? {
            return Err(LocalizationError::NotInjective);
        }
        let seed = self.seed.bumped(Vertex::new(1, 1), 1);
        if seed.is_realization(&self.graph) {
            return Err(LocalizationError::Surjective);
        }
        let graph = seed.graph();
        Ok(ModuleSpec {
            seed,
            graph,
            sigma: self.sigma.clone(),
        })
    }

    pub fn is_simple(&self) -> bool {
        is_simple_realization(&self.graph, &self.seed)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{parse_scalar, parse_scalar_list};

    fn generic() -> ModuleSpec {
        let lambda: Vec<Rational> = parse_scalar_list("-1/6,-2/3,5/6").unwrap();
        ModuleSpec::highest_weight(&lambda, &Permutation::identity(3)).unwrap()
    }

    #[test]
    fn generic_module_localizes() {
        let m = generic();
        m.validate().unwrap();
        assert!(m.f_acts_injectively().unwrap());
        let loc = m.localize().unwrap();
        loc.validate().unwrap();
        assert!(!loc.graph.has_arrow(Vertex::new(2, 1), Vertex::new(1, 1)));
        assert_eq!(loc.localize().unwrap(), loc);
        assert_eq!(
            m.twisted_localize(&Rational::from_integer(0.into()))
                .unwrap(),
            loc
        );
    }

    #[test]
    fn finite_module_refuses() {
        let lambda: Vec<Rational> = parse_scalar_list("2,1,0").unwrap();
        let m = ModuleSpec::highest_weight(&lambda, &Permutation::identity(3)).unwrap();
        assert!(!m.f_acts_injectively().unwrap());
        assert_eq!(m.localize(), Err(LocalizationError::NotInjective));
    }

    #[test]
    fn simplicity_flips_with_z() {
        let m = generic();
        for (z, simple) in [("1/3", true), ("1", false), ("1/2", false), ("3/2", false)] {
            let out = m.twisted_localize(&parse_scalar(z).unwrap()).unwrap();
            assert_eq!(out.is_simple(), simple, "z = {z}");
        }
    }

    #[test]
    fn twisting_functor_is_simple() {
        let t = generic().twisting_functor().unwrap();
        t.validate().unwrap();
        assert!(t.is_simple());
    }
}
