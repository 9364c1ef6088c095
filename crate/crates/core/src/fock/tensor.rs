//! Second implementation of the action through symbols and the tensor
//! product of level-one Fock spaces. Used as an oracle for [`Fock::apply`].

use super::{Fock, Generator};
use crate::combinat::Multipartition;
use crate::laurent::Laurent;
use crate::scalar::Coefficient;
use crate::symbols::{partition_of, symbol_of, Symbol};

/// K-weight of bead set of row `c`: `+1` if `i` is a bead and `i + 1` is not,
/// `−1` in the reverse case.
fn bead_weight(sym: &Symbol, c: usize, i: i64) -> i64 {
    match (sym.contains(c, i), sym.contains(c, i + 1)) {
        (true, false) => 1,
        (false, true) => -1,
        _ => 0,
    }
}

/// Moves bead `from` of row `c` to `to`, keeping the row sorted.
fn move_bead(sym: &Symbol, c: usize, from: i64, to: i64) -> Symbol {
    let mut rows = sym.rows().to_vec();
    let row = &mut rows[c - 1];
    let k = row.binary_search(&from).expect("bead present");
    row[k] = to;
    row.sort_unstable();
    Symbol::new(rows, sym.base()).expect("bead moves keep rows increasing")
}

fn truncation_for(lam: &Multipartition, s: &crate::combinat::Charge) -> i64 {
    // one spare frozen bead per row so that F can act at the bottom
    lam.components()
        .iter()
        .enumerate()
        .map(|(ci, p)| p.len() as i64 + 1 - s.get(ci + 1))
        .max()
        .unwrap_or(0)
        .max(1)
}

/// The same map as [`Fock::apply`], computed factor by factor with the
/// coproduct weights.
pub fn tensor_oracle_apply<C: Coefficient>(g: Generator, i: i64, v: &Fock<C>) -> Fock<C> {
    let s = v.charge().clone();
    let rank = match g {
        Generator::F => v.rank() + 1,
        Generator::E => v.rank().saturating_sub(1),
        _ => v.rank(),
    };
    let mut out = Fock::zero(s.clone(), rank);
    let l = s.level();
    for (lam, coeff) in v.terms() {
        let sym = symbol_of(lam, &s, truncation_for(lam, &s)).expect("truncation is large enough");
        let w: Vec<i64> = (1..=l).map(|c| bead_weight(&sym, c, i)).collect();
        match g {
            Generator::K | Generator::KInv => {
                let t: i64 = w.iter().sum();
                let e = if g == Generator::K { t } else { -t };
                out.add_term(lam.clone(), coeff.shift(e));
            }
            Generator::F => {
                for c in 1..=l {
                    if w[c - 1] == 1 {
                        let e: i64 = w[c..].iter().sum();
                        let mu = partition_of(&move_bead(&sym, c, i, i + 1));
                        out.add_term(mu, coeff * &Laurent::q_pow(e));
                    }
                }
            }
            Generator::E => {
                for c in 1..=l {
                    if w[c - 1] == -1 {
                        let e: i64 = w[..c - 1].iter().sum();
                        let mu = partition_of(&move_bead(&sym, c, i + 1, i));
                        out.add_term(mu, coeff * &Laurent::q_pow(-e));
                    }
                }
            }
        }
    }
    out
}
