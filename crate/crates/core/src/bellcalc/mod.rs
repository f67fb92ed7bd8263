//! Set partitions, Stirling and Bell numbers, truncated exponential
//! generating functions and the Hadamard exponential product.

mod egf;
mod hadamard;
mod numbers;
mod partition;

pub use egf::{egf_exp, egf_log, egf_mul, hadamard, poly_eval, poly_mul, Coeff, EgfSeries, Poly};
pub use hadamard::{
    coefficient_sum, diagram_census, diagram_census_bounded, free_exponential,
    hadamard_via_coefficients, hadamard_via_diagrams, hadamard_via_diagrams_bounded,
    hadamard_via_partitions, hadamard_via_partitions_bounded, mult_of_diagram, specialize,
    total_multiplicity, type_monomial, DEFAULT_HADAMARD_BOUND,
};
pub use numbers::{bell, bell_polynomial, stirling2, stirling2_row};
pub use partition::{
    for_each_set_partition, set_partitions, set_partitions_bounded, PartitionType, SetPartition,
    DEFAULT_PARTITION_BOUND,
};
