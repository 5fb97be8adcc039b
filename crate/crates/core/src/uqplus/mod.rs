//! The quantized enveloping algebra: normal forms in U⁺ and U, Lusztig
//! symmetries, PBW bases of U⁺[w], characters, coproducts and twists.
//!
//! U⁺ is the free algebra on `E_1, …, E_n` modulo the quantum Serre ideal,
//! handled one weight component at a time: the ideal component is kept in
//! reduced echelon form with the lexicographically largest word as pivot,
//! and the non-pivot ("standard") words form the basis of `U⁺_μ`. The same
//! relations give U⁻. Elements of U are stored as `Σ c · F_f K_μ E_e`.

mod chars;
mod free;
mod hopf;
mod linalg;
mod lusztig;
mod nf;
mod pbw;
mod twist;
mod uelt;

use std::fmt;

pub use chars::{
    char_eval, char_well_defined, enumerate_polynomial_ideals, is_in_p_theta, quotient_is_commutative_polynomial,
    CharValues,
};
pub use free::{serre_relation, word_weight, words_of_weight, FreeElt, Word};
pub use hopf::{
    borel_elt, coproduct, counit, is_coassociative_at, is_q2_compatible, psi_apply, psi_inverse, satisfies_counit_law,
    BKey, TensorElt,
};
pub use linalg::{Echelon, Lin};
pub use lusztig::{defining_relations, lusztig_gen, lusztig_t, lusztig_t_inv, root_vectors, Braid};
pub use nf::{kostant_partitions, nf_plus, NfContext, UPlusElt, WeightData};
pub use pbw::{pbw_expand, Exponents, PbwBasis, PbwVec};
pub use twist::{coideal_check, coideal_report, twist_element, twist_generators, CoidealReport};
pub use uelt::{divided_power, eval_expr, k_bracket, u_normal_form, Gen, UElt, UExpr, UKey};

use crate::coeffs::QRat;

/// Writes `Σ c·key` with signs folded into the separators.
pub(crate) fn fmt_sum<'a, K: 'a, I, F>(f: &mut fmt::Formatter<'_>, terms: I, mut key: F) -> fmt::Result
where
    I: Iterator<Item = (&'a K, &'a QRat)>,
    F: FnMut(&mut fmt::Formatter<'_>, &K) -> fmt::Result,
{
    let mut first = true;
    for (k, c) in terms {
        let s = c.to_string();
        let neg = s.starts_with('-');
        let mag = if neg { (-c).to_string() } else { s };
        match (first, neg) {
            (true, true) => write!(f, "-")?,
            (false, true) => write!(f, " - ")?,
            (false, false) => write!(f, " + ")?,
            (true, false) => {}
        }
        first = false;
        let mut body = String::new();
        {
            struct W<'b, K, G>(&'b K, std::cell::RefCell<G>);
            impl<K, G: FnMut(&mut fmt::Formatter<'_>, &K) -> fmt::Result> fmt::Display for W<'_, K, G> {
                fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                    (self.1.borrow_mut())(f, self.0)
                }
            }
            use std::fmt::Write;
            write!(body, "{}", W(k, std::cell::RefCell::new(&mut key)))?;
        }
        if body.is_empty() {
            write!(f, "{mag}")?;
        } else if mag == "1" {
            write!(f, "{body}")?;
        } else if mag.contains(' ') {
            write!(f, "({mag})*{body}")?;
        } else {
            write!(f, "{mag}*{body}")?;
        }
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}
