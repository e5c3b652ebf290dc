//! Resolving the system and the set of elements a command runs over.

use std::collections::BTreeSet;

use bruhat_core::{CoxeterSystem, Element};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::args::{ScopeArgs, SystemArgs};
use crate::descriptor::{infer_type_a_rank, SystemDoc};
use crate::error::CliError;

/// Largest universe a scope may enumerate.
pub const MAX_UNIVERSE: usize = 100_000;

/// A system together with the descriptor it was built from.
#[derive(Clone, Debug)]
pub struct Context {
    pub doc: SystemDoc,
    pub sys: CoxeterSystem,
}

impl Context {
    pub fn parse(&self, literal: &str) -> Result<Element, CliError> {
        self.sys
            .parse_element(literal)
            .map_err(|e| CliError::Input(format!("element `{literal}`: {e}")))
    }

    pub fn name(&self, x: &Element) -> String {
        self.sys.format_element(x)
    }
}

/// Builds the system from the flags, inferring a type-A rank from the
/// element literals when no rank is given.
pub fn resolve_system(args: &SystemArgs, literals: &[String]) -> Result<Context, CliError> {
    let infer = || -> Result<usize, CliError> {
        if literals.is_empty() {
            return Err(CliError::Input(
                "no system given: pass --group, --type/--rank, --matrix-file or --w".into(),
            ));
        }
        literals
            .iter()
            .map(|l| infer_type_a_rank(l))
            .try_fold(1, |acc, r| Ok(acc.max(r?)))
    };
    let doc = if let Some(path) = &args.matrix_file {
        SystemDoc::read_file(path)?
    } else if let Some(group) = &args.group {
        SystemDoc::parse_group(group)?
    } else if let Some(kind) = &args.kind {
        let kind = kind.trim().to_ascii_uppercase();
        let rank = match args.rank {
            Some(r) => r,
            None if kind == "A" => infer()?,
            None => {
                return Err(CliError::Input(format!(
                    "--rank is required for type {kind}"
                )))
            }
        };
        SystemDoc::Named { kind, rank }
    } else {
        SystemDoc::Named {
            kind: "A".into(),
            rank: infer()?,
        }
    };
    let sys = doc.build()?;
    Ok(Context { doc, sys })
}

/// Serialized description of a resolved scope.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct ScopeDoc {
    /// `elements`, `all` or `sample`.
    pub kind: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub max_length: Option<u32>,
    pub size: usize,
    pub elements: Vec<String>,
}

/// The elements a check or scan runs over, sorted by (length, canonical)
/// unless given explicitly.
#[derive(Clone, Debug)]
pub struct Scope {
    pub kind: &'static str,
    pub seed: Option<u64>,
    pub max_length: Option<u32>,
    pub elements: Vec<Element>,
}

impl Scope {
    pub fn doc(&self, ctx: &Context) -> ScopeDoc {
        ScopeDoc {
            kind: self.kind.into(),
            seed: self.seed,
            max_length: self.max_length,
            size: self.elements.len(),
            elements: self.elements.iter().map(|x| ctx.name(x)).collect(),
        }
    }
}

pub fn resolve_scope(ctx: &Context, args: &ScopeArgs) -> Result<Scope, CliError> {
    if !args.w.is_empty() {
        let mut seen = BTreeSet::new();
        let mut elements = Vec::new();
        for literal in &args.w {
            let x = ctx.parse(literal)?;
            if args.max_length.is_some_and(|l| x.length() > l) {
                return Err(CliError::Input(format!(
                    "`{literal}` is longer than --max-length"
                )));
            }
            if seen.insert(x.clone()) {
                elements.push(x);
            }
        }
        return Ok(Scope {
            kind: "elements",
            seed: None,
            max_length: args.max_length,
            elements,
        });
    }
    let universe = ball(&ctx.sys, args.max_length, MAX_UNIVERSE)?;
    match args.sample {
        None => Ok(Scope {
            kind: "all",
            seed: None,
            max_length: args.max_length,
            elements: universe,
        }),
        Some(n) => Ok(Scope {
            kind: "sample",
            seed: Some(args.seed),
            max_length: args.max_length,
            elements: sample(universe, n, args.seed),
        }),
    }
}

/// `n` distinct members of `universe` chosen by a ChaCha8 shuffle seeded
/// with `seed`, returned sorted.
pub fn sample(mut universe: Vec<Element>, n: usize, seed: u64) -> Vec<Element> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    universe.shuffle(&mut rng);
    universe.truncate(n);
    universe.sort();
    universe
}

/// All elements of length at most `max_length` (all of a finite group when
/// `None`), sorted, by breadth-first search on length levels.
pub fn ball(
    sys: &CoxeterSystem,
    max_length: Option<u32>,
    cap: usize,
) -> Result<Vec<Element>, CliError> {
    let mut out = vec![sys.identity()];
    let mut level = vec![sys.identity()];
    let mut length = 0;
    while !level.is_empty() && max_length.is_none_or(|l| length < l) {
        let mut next = BTreeSet::new();
        for x in &level {
            for s in sys.generators() {
                let y = sys.rmul_gen(x, s);
                if y.length() > x.length() {
                    next.insert(y);
                }
            }
        }
        level = next.into_iter().collect();
        length += 1;
        out.extend(level.iter().cloned());
        if out.len() > cap {
            return Err(CliError::Input(format!(
                "scope would exceed {cap} elements; pass --w or a smaller --max-length"
            )));
        }
    }
    Ok(out)
}
