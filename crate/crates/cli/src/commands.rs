//! Subcommand bodies. Each returns an [`Output`] carrying both renderings.

use std::fs;
use std::path::Path;

use fockbasis::characters::{constructible_characters, jm_cellular_characters};
use fockbasis::fock::canonical::canonical_basis;
use fockbasis::fock::monomial::apply_word;
use fockbasis::symbols::{enumerate_family, expand_simple, minimal_symbol, partition_of, symbol_of, FamilyKey};
use fockbasis::{Character, Charge, FockVector, MonomialWord, Multipartition, Symbol};
use serde::{Deserialize, Serialize};

use crate::cache::{self, CacheKey};

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Lib(fockbasis::Error),
}

impl From<fockbasis::Error> for CliError {
    fn from(e: fockbasis::Error) -> Self {
        CliError::Lib(e)
    }
}

pub type CliResult<T> = Result<T, CliError>;

pub struct Output {
    pub json: String,
    pub text: String,
    /// False when a check reported a failure.
    pub ok: bool,
}

impl Output {
    pub fn new<T: Serialize>(value: &T, text: String) -> Self {
        Output {
            json: serde_json::to_string(value).expect("outputs serialize"),
            text,
            ok: true,
        }
    }
}

pub fn parse_ints(text: &str) -> CliResult<Vec<i64>> {
    text.split(',')
        .map(|t| t.trim())
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<i64>().map_err(|_| CliError::Usage(format!("not an integer: {t:?}"))))
        .collect()
}

pub fn parse_charge(text: &str) -> CliResult<Charge> {
    let v = parse_ints(text)?;
    if v.is_empty() {
        return Err(CliError::Usage("the charge needs at least one entry".into()));
    }
    Ok(Charge::new(v))
}

fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> CliResult<T> {
    let text = fs::read_to_string(path).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))
}

pub fn fock_apply(charge: &Charge, word: &str, input: Option<&Path>) -> CliResult<Output> {
    let w: MonomialWord =
        serde_json::from_str(word).map_err(|e| CliError::Usage(format!("bad word {word:?}: {e}")))?;
    let w = MonomialWord::new(w.0)?;
    let v = match input {
        Some(p) => {
            let v: FockVector = read_json(p)?;
            if v.charge() != charge {
                return Err(CliError::Usage(format!(
                    "input vector has charge {:?}, not {:?}",
                    v.charge().values(),
                    charge.values()
                )));
            }
            v
        }
        None => FockVector::vacuum(charge.clone()),
    };
    let out = apply_word(&w, v)?;
    Ok(Output::new(&out, out.to_string()))
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CanonEntry {
    pub lambda: Multipartition,
    pub vector: FockVector,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CanonOutput {
    pub charge: Charge,
    pub rank: usize,
    pub basis: Vec<CanonEntry>,
}

fn canon_text(c: &CanonOutput) -> String {
    c.basis
        .iter()
        .map(|e| format!("G({}) = {}", e.lambda, e.vector))
        .collect::<Vec<_>>()
        .join("\n")
}

pub fn canon(charge: &Charge, rank: usize, cache_dir: Option<&Path>) -> CliResult<Output> {
    let key = CacheKey::new(charge, rank);
    if let Some(json) = cache_dir.and_then(|d| cache::load(d, &key)) {
        if let Ok(c) = serde_json::from_str::<CanonOutput>(&json) {
            return Ok(Output {
                text: canon_text(&c),
                json,
                ok: true,
            });
        }
    }
    let basis = canonical_basis(rank, charge)?;
    let c = CanonOutput {
        charge: charge.clone(),
        rank,
        basis: basis
            .into_iter()
            .map(|(lambda, vector)| CanonEntry { lambda, vector })
            .collect(),
    };
    let out = Output::new(&c, canon_text(&c));
    if let Some(d) = cache_dir {
        cache::store(d, &key, &out.json).map_err(|e| CliError::Usage(format!("cache {}: {e}", d.display())))?;
    }
    Ok(out)
}

pub fn expand(symbol: &Path) -> CliResult<Output> {
    let sym: Symbol = read_json(symbol)?;
    let s = sym.charge();
    let lam = partition_of(&sym);
    let v: FockVector = expand_simple(&lam, &s, sym.m())?;
    let mut blocks = Vec::new();
    for (mu, c) in v.terms() {
        let mut t = symbol_of(mu, &s, sym.m())?;
        if sym.is_finite() {
            t = t.to_finite();
        }
        blocks.push(format!("{c}\n{}", t.to_text()));
    }
    Ok(Output::new(&v, blocks.join("\n\n")))
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RankedSymbol {
    pub symbol: Symbol,
    pub b: i64,
    pub b_prime: i64,
}

impl RankedSymbol {
    fn of(symbol: Symbol) -> CliResult<Self> {
        let (b, b_prime) = symbol.b_invariants()?;
        Ok(RankedSymbol { symbol, b, b_prime })
    }

    fn text(&self) -> String {
        format!("{}\nb = {}, b' = {}", self.symbol.to_text(), self.b, self.b_prime)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FamilyOutput {
    pub key: FamilyKey,
    pub symbols: Vec<RankedSymbol>,
}

fn family_key(lengths: &[i64], multiset: &[i64]) -> CliResult<FamilyKey> {
    let lengths = lengths
        .iter()
        .map(|&n| usize::try_from(n).map_err(|_| CliError::Usage(format!("negative row length {n}"))))
        .collect::<CliResult<Vec<_>>>()?;
    Ok(FamilyKey::new(lengths, multiset.to_vec())?)
}

pub fn family_enum(lengths: &[i64], multiset: &[i64]) -> CliResult<Output> {
    let key = family_key(lengths, multiset)?;
    let symbols = enumerate_family(&key)?
        .into_iter()
        .map(RankedSymbol::of)
        .collect::<CliResult<Vec<_>>>()?;
    let text = symbols.iter().map(RankedSymbol::text).collect::<Vec<_>>().join("\n\n");
    Ok(Output::new(&FamilyOutput { key, symbols }, text))
}

pub fn family_min_b(lengths: &[i64], multiset: &[i64]) -> CliResult<Output> {
    let key = family_key(lengths, multiset)?;
    let r = RankedSymbol::of(minimal_symbol(&key)?)?;
    let text = r.text();
    Ok(Output::new(&FamilyOutput { key, symbols: vec![r] }, text))
}

pub fn chars(constructible: bool, charge: &Charge, rank: usize) -> CliResult<Output> {
    let set = if constructible {
        constructible_characters(rank, charge)?
    } else {
        jm_cellular_characters(rank, charge)?
    };
    let list: Vec<Character> = set.into_iter().collect();
    let text = list.iter().map(|c| c.to_string()).collect::<Vec<_>>().join("\n");
    Ok(Output::new(&list, text))
}
