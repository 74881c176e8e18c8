//! Zero-dimensional solving over `Q`: lexicographic Groebner bases,
//! eliminants, shape bases and real-root counts of osculating instances.

mod buchberger;
mod solve;
mod system;
mod wcheck;

pub use buchberger::{
    groebner_basis, groebner_basis_in, is_zero_dimensional, is_zero_dimensional_in, normal_form, normal_form_in, reduce_basis,
    reduce_basis_in, standard_monomial_count, standard_monomials, standard_monomials_in, GbBudget, MonomialOrder,
};
pub use solve::{
    eliminant, eval_mod, solve_instance, solve_instance_detailed, solve_system, InstanceSolution, ShapeBasis,
    Solution, SolveOptions, SolveReport,
};
pub use system::{buchberger_lex, linear_interreduce, PolySystem};
pub use wcheck::{solution_wronskian_orders, WronskianOrder};
