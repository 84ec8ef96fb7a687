//! The bigraded Yoneda algebra `E(A) = Ext^*(A_0, A_0)`: dimension tables,
//! products, classification by generator degrees, `E_k` subalgebras and
//! arity bookkeeping for higher multiplications.

pub mod ainfty;
pub mod classify;
pub mod delta;
pub mod ek;
pub mod table;
pub mod yoneda;

pub use ainfty::{ainfty_feasible_arities, closed_form_arities, reduced_2l_check, support_arities, ArityReport, Reduced2lReport, Status};
pub use classify::{
    classify, classify_module, ext_generation_degrees, generation_criterion, generation_verdict, module_generation,
    yoneda_surjectivity_check, Classification, GenerationReport, ModuleClassification, ModuleGeneration, Verdict,
};
pub use delta::{delta, DeltaFunction};
pub use ek::{ek_structure_constants, ek_subalgebra};
pub use table::{ext_table, ExtTable};
pub use yoneda::{ext_basis, lift_class, yoneda_action, yoneda_product, ExtClass, YonedaCache};

#[cfg(test)]
mod tests;
