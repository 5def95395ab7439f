//! Operation counting for the form and meaning processes and empirical
//! checks of their growth rates.

pub mod counter;
pub mod fit;
pub mod generate;
pub mod literal;
pub mod report;

pub use counter::OpCounter;
pub use fit::{fit_growth, Fit, GrowthMode};
pub use generate::{generate_event_domain, generate_form_input, FormInput};
pub use report::{
    instrumented_run, run, run_sweep, verify_theorems, Claim, NamedFit, Process, ProcessInput,
    ProcessOutput, ProfileReport, ProfileSample, SizeParams, SweepConfig, Verdict,
};
