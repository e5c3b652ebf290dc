//! Verification lab: clause-by-clause theorem checks, appendix fact
//! suites, and evidence scans for open questions.

pub mod appendix;
pub mod report;
pub mod scans;
pub mod theorems;

pub use appendix::{verify_appendix, APPENDIX_CLAUSES};
pub use report::{CheckReport, Clause, Outcome};
pub use scans::{
    all_elements, degree_class_scan, degree_monotone_scan, deodhar_scan, direct_product_witness,
    poincare, poincare_compare, remark_witness_hunt, remark_witness_hunt_in, DeodharScan,
    MonotoneScan, Polynomial, RemarkWitnesses,
};
pub use theorems::{
    verify_theorem1, verify_theorem1_on, verify_theorem2, verify_theorem2_on, ClauseSpec,
    THEOREM1_CLAUSES, THEOREM2_CLAUSES,
};
