//! Named strategies selected at runtime: matrix backends and verification suites.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::bimod;
use crate::chainrep::{Backend, ChainContext, EvalBackend, QwbParams, SymbolicBackend};
use crate::fusion::chain_decompose;
use crate::partitions::{atypical_set, cross_set};
use crate::xcat::{self, Level, XMod};

#[derive(Debug, Error)]
pub enum RegistryError {
    #[error("unknown {kind} {name:?}; known: {known}")]
    Unknown { kind: &'static str, name: String, known: String },
    #[error("{0}")]
    Failed(String),
}

/// Settings shared by backend factories.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct BackendConfig {
    pub seed: u64,
    pub points: usize,
}

impl Default for BackendConfig {
    fn default() -> Self {
        BackendConfig { seed: 7, points: 3 }
    }
}

type BackendFactory = Box<dyn Fn(&BackendConfig) -> Box<dyn Backend> + Send + Sync>;

pub struct BackendRegistry {
    factories: BTreeMap<&'static str, BackendFactory>,
}

impl BackendRegistry {
    pub fn empty() -> Self {
        BackendRegistry { factories: BTreeMap::new() }
    }

    pub fn register<F>(&mut self, name: &'static str, make: F)
    where
        F: Fn(&BackendConfig) -> Box<dyn Backend> + Send + Sync + 'static,
    {
        self.factories.insert(name, Box::new(make));
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.factories.keys().copied().collect()
    }

    pub fn create(&self, name: &str, cfg: &BackendConfig) -> Result<Box<dyn Backend>, RegistryError> {
        self.factories.get(name).map(|f| f(cfg)).ok_or_else(|| RegistryError::Unknown {
            kind: "backend",
            name: name.into(),
            known: self.names().join(", "),
        })
    }
}

impl Default for BackendRegistry {
    fn default() -> Self {
        let mut r = Self::empty();
        r.register("symbolic", |_| Box::new(SymbolicBackend));
        r.register("eval", |c| Box::new(EvalBackend::seeded(c.seed, c.points)));
        r
    }
}

/// One named check at one level.
#[derive(Clone, Debug, Serialize)]
pub struct Outcome {
    pub suite: &'static str,
    pub m: usize,
    pub n: usize,
    pub check: String,
    pub holds: bool,
    pub detail: Option<String>,
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mark = if self.holds { "ok" } else { "FAIL" };
        write!(f, "{mark:4} {} ({},{}) {}", self.suite, self.m, self.n, self.check)?;
        if let Some(d) = &self.detail {
            write!(f, ": {d}")?;
        }
        Ok(())
    }
}

pub struct SuiteContext<'a> {
    pub max_mn: usize,
    pub backend: &'a dyn Backend,
}

pub trait Suite: Send + Sync {
    fn name(&self) -> &'static str;
    fn describe(&self) -> &'static str;
    /// Smallest total m+n the suite looks at.
    fn min_mn(&self) -> usize {
        1
    }
    fn run_level(&self, m: usize, n: usize, ctx: &SuiteContext) -> Vec<Outcome>;

    fn run(&self, ctx: &SuiteContext) -> Vec<Outcome> {
        let levels: Vec<(usize, usize)> =
            (self.min_mn()..=ctx.max_mn).flat_map(|t| (0..=t).map(move |m| (m, t - m))).collect();
        let mut out: Vec<Vec<Outcome>> = levels.par_iter().map(|&(m, n)| self.run_level(m, n, ctx)).collect();
        out.iter_mut().flat_map(std::mem::take).collect()
    }
}

fn outcome(suite: &'static str, m: usize, n: usize, check: impl Into<String>, holds: bool) -> Outcome {
    Outcome { suite, m, n, check: check.into(), holds, detail: None }
}

fn error(suite: &'static str, m: usize, n: usize, check: &str, e: impl fmt::Display) -> Outcome {
    Outcome { suite, m, n, check: check.into(), holds: false, detail: Some(e.to_string()) }
}

/// qwB relations of the chain generators.
pub struct RelationsSuite;

impl Suite for RelationsSuite {
    fn name(&self) -> &'static str {
        "relations"
    }
    fn describe(&self) -> &'static str {
        "walled Brauer relations of the chain generators"
    }
    fn min_mn(&self) -> usize {
        2
    }
    fn run_level(&self, m: usize, n: usize, ctx: &SuiteContext) -> Vec<Outcome> {
        match ctx.backend.check_qwb_relations(&ChainContext::new(m, n), &QwbParams::chain()) {
            Ok(checks) => checks.into_iter().map(|c| outcome(self.name(), m, n, c.relation, c.holds)).collect(),
            Err(e) => vec![error(self.name(), m, n, "build", e)],
        }
    }
}

/// Chain generators commute with the coproduct action.
pub struct CentralizerSuite;

impl Suite for CentralizerSuite {
    fn name(&self) -> &'static str {
        "centralizer"
    }
    fn describe(&self) -> &'static str {
        "chain generators commute with the quantum group"
    }
    fn min_mn(&self) -> usize {
        2
    }
    fn run_level(&self, m: usize, n: usize, ctx: &SuiteContext) -> Vec<Outcome> {
        match ctx.backend.check_centralizer(&ChainContext::new(m, n)) {
            Ok(checks) => checks.into_iter().map(|c| outcome(self.name(), m, n, c.relation, c.holds)).collect(),
            Err(e) => vec![error(self.name(), m, n, "build", e)],
        }
    }
}

/// The two induction identities relating (m,n) and (m,n+1).
pub struct IdentitiesSuite;

impl Suite for IdentitiesSuite {
    fn name(&self) -> &'static str {
        "identities"
    }
    fn describe(&self) -> &'static str {
        "tensoring with 3̄ against restriction, on ℚ and ℙ images"
    }
    fn run_level(&self, m: usize, n: usize, _: &SuiteContext) -> Vec<Outcome> {
        let mut out = Vec::new();
        for (check, r) in [("identity1", bimod::identity_tensor(m, n)), ("identity2", bimod::identity_proj(m, n))] {
            out.push(match r {
                Ok(c) if c.holds() => outcome(self.name(), m, n, check, true),
                Ok(c) => {
                    let res: Vec<String> = c.residual().iter().take(4).map(|(p, a, b)| format!("{p}: {a} vs {b}")).collect();
                    Outcome { detail: Some(res.join("; ")), ..outcome(self.name(), m, n, check, false) }
                }
                Err(e) => error(self.name(), m, n, check, e),
            });
        }
        out
    }
}

/// Dimension bookkeeping across the bimodule, the chain and the restriction tables.
pub struct DimsSuite;

impl DimsSuite {
    fn restriction_holds(m: usize, n: usize) -> Result<bool, bimod::BimodError> {
        let lv = Level::new(m, n);
        let mut mods: Vec<XMod> = cross_set(m, n).into_iter().map(XMod::D).collect();
        mods.extend(atypical_set(m, n).iter().map(|a| XMod::K(a.bipartition())));
        for x in &mods {
            let dim = bimod::dim_x(x, lv)?;
            if n >= 1 && m + n >= 2 && bimod::dim_x_groth(&xcat::res_right(x, lv)?, Level::new(m, n - 1))? != dim {
                return Ok(false);
            }
            if m >= 1 && m + n >= 2 && bimod::dim_x_groth(&xcat::res_left(x, lv)?, Level::new(m - 1, n))? != dim {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

impl Suite for DimsSuite {
    fn name(&self) -> &'static str {
        "dims"
    }
    fn describe(&self) -> &'static str {
        "dimension audit, weighted images, graph projections and restriction dimensions"
    }
    fn run_level(&self, m: usize, n: usize, _: &SuiteContext) -> Vec<Outcome> {
        let s = self.name();
        let mut out = vec![match bimod::dimension_audit(m, n) {
            Ok(a) => outcome(s, m, n, "total dimension 3^(m+n)", a.holds()),
            Err(e) => error(s, m, n, "total dimension 3^(m+n)", e),
        }];
        out.push(match bimod::weighted_images(m, n) {
            Ok((q, p)) => {
                let chain = chain_decompose(m, n);
                outcome(s, m, n, "weighted images recover the chain", q == chain && p == bimod::p_functor_groth(&chain))
            }
            Err(e) => error(s, m, n, "weighted images recover the chain", e),
        });
        let proj = bimod::atypical_part(m, n).and_then(|g| {
            Ok(g.q_projection()? == bimod::q_closed_form(m, n) && g.p_projection()? == bimod::p_closed_form(m, n)?)
        });
        out.push(match proj {
            Ok(h) => outcome(s, m, n, "graph projections equal closed forms", h),
            Err(e) => error(s, m, n, "graph projections equal closed forms", e),
        });
        out.push(match Self::restriction_holds(m, n) {
            Ok(h) => outcome(s, m, n, "restriction preserves dimension", h),
            Err(e) => error(s, m, n, "restriction preserves dimension", e),
        });
        out
    }
}

pub struct SuiteRegistry {
    suites: Vec<Box<dyn Suite>>,
}

impl SuiteRegistry {
    pub fn empty() -> Self {
        SuiteRegistry { suites: Vec::new() }
    }

    pub fn register(&mut self, suite: Box<dyn Suite>) {
        self.suites.retain(|s| s.name() != suite.name());
        self.suites.push(suite);
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.suites.iter().map(|s| s.name()).collect()
    }

    pub fn get(&self, name: &str) -> Result<&dyn Suite, RegistryError> {
        self.suites.iter().find(|s| s.name() == name).map(|s| s.as_ref()).ok_or_else(|| RegistryError::Unknown {
            kind: "suite",
            name: name.into(),
            known: self.names().join(", "),
        })
    }

    /// The named suite, or every suite for "all".
    pub fn select(&self, name: &str) -> Result<Vec<&dyn Suite>, RegistryError> {
        if name == "all" {
            Ok(self.suites.iter().map(|s| s.as_ref()).collect())
        } else {
            Ok(vec![self.get(name)?])
        }
    }
}

impl Default for SuiteRegistry {
    fn default() -> Self {
        let mut r = Self::empty();
        r.register(Box::new(RelationsSuite));
        r.register(Box::new(CentralizerSuite));
        r.register(Box::new(IdentitiesSuite));
        r.register(Box::new(DimsSuite));
        r
    }
}
