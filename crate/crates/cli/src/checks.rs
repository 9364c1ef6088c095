//! `check` subcommands: one report per rank (or per label for `conj`).

use fockbasis::combinat::multipartitions;
use fockbasis::conjectures::{check_m_lambda, check_min_b, check_quasimonomial, Report};
use fockbasis::fock::tensor::tensor_oracle_apply;
use fockbasis::laurent::quantum_integer;
use fockbasis::{Charge, FockVector, Generator, LaurentPoly, Multipartition};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::commands::{CliResult, Output};

const QUASI_BUDGET: u64 = 1_000_000;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckReport {
    pub check: String,
    pub charge: Charge,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rank: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lambda: Option<Multipartition>,
    pub pass: bool,
    pub detail: Value,
}

impl From<Report> for CheckReport {
    fn from(r: Report) -> Self {
        CheckReport {
            check: r.check.to_string(),
            charge: r.charge,
            rank: Some(r.lambda.rank()),
            lambda: Some(r.lambda),
            pass: r.pass,
            detail: r.detail,
        }
    }
}

fn indices(s: &Charge, n: usize) -> std::ops::RangeInclusive<i64> {
    let lo = s.values().iter().min().copied().unwrap_or(0) - n as i64 - 1;
    let hi = s.values().iter().max().copied().unwrap_or(0) + n as i64 + 1;
    lo..=hi
}

fn word(v: &FockVector, letters: &[(Generator, i64)]) -> FockVector {
    letters.iter().fold(v.clone(), |w, &(g, i)| w.apply(g, i))
}

/// `K_i v = q^{N} v` on a basis vector; returns `N`.
fn weight(v: &FockVector, lam: &Multipartition, i: i64) -> i64 {
    v.apply(Generator::K, i).coeff(lam).max_exponent().unwrap_or(0)
}

fn signed_quantum(n: i64) -> LaurentPoly {
    let q: LaurentPoly = quantum_integer(n.unsigned_abs() as u32);
    if n < 0 {
        -q
    } else {
        q
    }
}

/// First violated relation on `|λ⟩` for the pair `(i, j)`.
fn relations(v: &FockVector, lam: &Multipartition, i: i64, j: i64) -> Option<String> {
    use Generator::{E, F, K};
    let comm = &word(v, &[(F, j), (E, i)]) - &word(v, &[(E, i), (F, j)]);
    let want = if i == j {
        v.scalar_mul(&signed_quantum(weight(v, lam, i)))
    } else {
        FockVector::zero(v.charge().clone(), v.rank())
    };
    if comm != want {
        return Some(format!("[E_{i}, F_{j}] on {lam}"));
    }
    let a = (i - 1 == j) as i64 - 2 * (i == j) as i64 + (i + 1 == j) as i64;
    let twisted = word(v, &[(K, i), (F, j)]).scalar_mul(&LaurentPoly::q_pow(a));
    if word(v, &[(F, j), (K, i)]) != twisted {
        return Some(format!("K_{i} F_{j} on {lam}"));
    }
    let two: LaurentPoly = quantum_integer(2);
    for g in [E, F] {
        if (i - j).abs() == 1 {
            let serre = &(&word(v, &[(g, j), (g, i), (g, i)]) + &word(v, &[(g, i), (g, i), (g, j)]))
                - &word(v, &[(g, i), (g, j), (g, i)]).scalar_mul(&two);
            if !serre.is_zero() {
                return Some(format!("Serre relation for {g:?}_{i}, {g:?}_{j} on {lam}"));
            }
        } else if (i - j).abs() > 1 && word(v, &[(g, i), (g, j)]) != word(v, &[(g, j), (g, i)]) {
            return Some(format!("{g:?}_{i} and {g:?}_{j} do not commute on {lam}"));
        }
    }
    None
}

fn per_rank<F>(name: &str, charge: &Charge, scope: usize, mut check: F) -> Vec<CheckReport>
where
    F: FnMut(&FockVector, &Multipartition, i64, i64) -> Option<String>,
{
    let mut out = Vec::new();
    for n in 0..=scope {
        let mut count = 0u64;
        let mut failure = None;
        'outer: for lam in multipartitions(n, charge.level()) {
            let v = FockVector::basis(lam.clone(), charge.clone());
            for i in indices(charge, n) {
                for j in indices(charge, n) {
                    count += 1;
                    if let Some(f) = check(&v, &lam, i, j) {
                        failure = Some(f);
                        break 'outer;
                    }
                }
            }
        }
        out.push(CheckReport {
            check: name.to_string(),
            charge: charge.clone(),
            rank: Some(n),
            lambda: None,
            pass: failure.is_none(),
            detail: json!({"checks": count, "failure": failure}),
        });
    }
    out
}

pub fn serre(charge: &Charge, scope: usize) -> Vec<CheckReport> {
    per_rank("relations", charge, scope, relations)
}

pub fn oracle(charge: &Charge, scope: usize) -> Vec<CheckReport> {
    per_rank("tensor_oracle", charge, scope, |v, lam, i, j| {
        // the second index only varies the generator
        let g = [Generator::E, Generator::F, Generator::K, Generator::KInv][j.rem_euclid(4) as usize];
        (v.apply(g, i) != tensor_oracle_apply(g, i, v)).then(|| format!("{g:?}_{i} on {lam}"))
    })
}

pub fn conj(charge: &Charge, scope: usize) -> CliResult<Vec<CheckReport>> {
    let mut out: Vec<CheckReport> = Vec::new();
    let v = charge.values();
    let quasi = v.len() == 2 && v[0] > v[1];
    for n in 0..=scope {
        out.extend(check_min_b(n, charge)?.into_iter().map(CheckReport::from));
        out.extend(check_m_lambda(n, charge)?.into_iter().map(CheckReport::from));
        if quasi {
            out.extend(check_quasimonomial(n, charge, QUASI_BUDGET)?.into_iter().map(CheckReport::from));
        }
    }
    Ok(out)
}

pub fn render(reports: Vec<CheckReport>) -> Output {
    let text = reports
        .iter()
        .map(|r| {
            let at = match (&r.lambda, r.rank) {
                (Some(l), _) => format!(" {l}"),
                (None, Some(n)) => format!(" n={n}"),
                _ => String::new(),
            };
            format!(
                "[{}] {} {:?}{}: {}",
                if r.pass { "PASS" } else { "FAIL" },
                r.check,
                r.charge.values(),
                at,
                r.detail
            )
        })
        .collect::<Vec<_>>()
        .join("\n");
    let mut out = Output::new(&reports, text);
    out.ok = reports.iter().all(|r| r.pass);
    out
}
