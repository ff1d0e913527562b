//! The maps between simsun permutations, increasing and ordered 1-2 trees,
//! Motzkin paths and compositions.

mod chi;
mod composition;
mod phi;
mod psi;

pub use chi::{chi, chi_inverse};
pub use composition::{
    rho, rho_inverse, rho_inverse_unchecked, varrho, zeta, zeta_compositions, Composition,
};
pub use phi::{phi, phi_inverse, phi_inverse_stages, phi_inverse_unchecked};
pub use psi::{psi, psi_inverse, psi_inverse_unchecked, psi_unchecked};

use crate::error::{Error, Result};
use crate::motzkin::MotzkinPath;
use crate::perm::{Pattern, Permutation};

/// The involution `ωᵢ = n + 1 − σ⁻¹_{n+1−i}`.
pub fn gamma(sigma: &Permutation) -> Permutation {
    let n = sigma.len();
    let inv = sigma.inverse();
    let word = (1..=n).map(|i| n + 1 - inv.at(n + 1 - i)).collect();
    Permutation::from_word_unchecked(word)
}

fn require_avoids(sigma: &Permutation, pattern: &str) -> Result<()> {
    let p: Pattern = pattern.parse().expect("static pattern");
    if sigma.contains_pattern(&p) {
        return Err(Error::Domain(format!("{sigma} contains {pattern}")));
    }
    Ok(())
}

/// `χ ∘ φ⁻¹` on 213-avoiding simsun permutations.
pub fn rs213_to_motzkin(sigma: &Permutation) -> Result<MotzkinPath> {
    let tree = phi_inverse(sigma)?;
    require_avoids(sigma, "213")?;
    Ok(chi(&tree.shape()))
}

/// Inverse of [`rs213_to_motzkin`].
pub fn motzkin_to_rs213(path: &MotzkinPath) -> Result<Permutation> {
    Ok(phi(&chi_inverse(path)?.rtl_preorder_label()))
}

/// `χ ∘ ψ ∘ φ⁻¹` on 231-avoiding simsun permutations.
pub fn rs231_to_motzkin(sigma: &Permutation) -> Result<MotzkinPath> {
    let tree = phi_inverse(sigma)?;
    require_avoids(sigma, "231")?;
    Ok(chi(&psi_unchecked(&tree)?.shape()))
}

/// Inverse of [`rs231_to_motzkin`].
pub fn motzkin_to_rs231(path: &MotzkinPath) -> Result<Permutation> {
    let labeled = chi_inverse(path)?.rtl_preorder_label();
    Ok(phi(&psi_inverse_unchecked(&labeled)?))
}
