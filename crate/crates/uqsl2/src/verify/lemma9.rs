//! The closed form of the straightening coefficients against their defining
//! recursion, over every short tuple with small entries, plus the downward
//! shift identity.

use crate::coproduct::{c_coeff_closed, c_coeff_recursive, c_shift_check, IndexTuple};
use crate::scalar::ScalarQ;

use super::VerificationReport;

/// All weakly increasing tuples of length `1..=n_max` with entries in
/// `0..=entry_max`.
fn all_tuples(n_max: i64, entry_max: i64) -> Vec<IndexTuple> {
    let mut out = Vec::new();
    fn rec(remaining: i64, min: i64, max: i64, prefix: &mut Vec<i64>, out: &mut Vec<IndexTuple>) {
        if remaining == 0 {
            out.push(IndexTuple::new(prefix.clone()));
            return;
        }
        for v in min..=max {
            prefix.push(v);
            rec(remaining - 1, v, max, prefix, out);
            prefix.pop();
        }
    }
    for n in 1..=n_max {
        rec(n, 0, entry_max, &mut Vec::new(), &mut out);
    }
    out
}

/// Closed form == recursion, integrality of the closed form, and the shift
/// identity, for every tuple with length `<= n_max` and entries
/// `<= entry_max`.
pub fn verify_lemma9(n_max: i64, entry_max: i64) -> VerificationReport {
    let mut report =
        VerificationReport::new("lemma9", &[("max_index", n_max), ("order", entry_max)]);
    let tuples = all_tuples(n_max, entry_max);
    report.note(format!("{} tuples enumerated", tuples.len()));
    for t in &tuples {
        let closed = c_coeff_closed(t);
        let recursive = c_coeff_recursive(t);
        report.check(
            &format!("closed == recursive at {t}"),
            &ScalarQ::from_laurent(closed.clone()),
            &recursive,
        );
        report.check_true(
            &format!("integrality at {t}"),
            recursive.is_laurent(),
            "recursion left a nontrivial denominator",
        );
        let min = *t.entries().first().unwrap();
        for a in 0..=min {
            report.check_true(
                &format!("shift by {a} at {t}"),
                c_shift_check(t, a),
                "shift identity failed",
            );
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_range_passes() {
        let r = verify_lemma9(3, 3);
        assert!(r.pass(), "{r}");
    }
}
