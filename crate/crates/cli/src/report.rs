//! Machine-readable run reports.

use serde::{Deserialize, Serialize};
use vclp::solve::SolveStats;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Answer {
    Yes,
    No,
    /// A kernel was produced instead of an answer.
    Kernel,
}

impl Answer {
    pub fn exit_code(self) -> u8 {
        match self {
            Answer::Yes | Answer::Kernel => 0,
            Answer::No => 1,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KernelReport {
    pub k_prime: i64,
    pub vertices: usize,
    pub edges: usize,
    pub dimacs: String,
    pub trace: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub problem: String,
    pub answer: Answer,
    /// Input labels of the witness set, ascending.
    pub witness: Option<Vec<u64>>,
    pub k: i64,
    /// LP optimum of the vertex cover instance that was solved, e.g. "2.5".
    pub vc_star: String,
    /// `k - vc*` of that instance, same rendering.
    pub mu: String,
    pub stats: Option<SolveStats>,
    pub kernel: Option<KernelReport>,
    pub wall_time_ms: f64,
}

impl RunReport {
    pub fn summary(&self) -> String {
        let mut out = format!(
            "{}: {} (k = {}, vc* = {}, mu = {})",
            self.problem,
            match self.answer {
                Answer::Yes => "YES",
                Answer::No => "NO",
                Answer::Kernel => "KERNEL",
            },
            self.k,
            self.vc_star,
            self.mu
        );
        if let Some(w) = &self.witness {
            let labels: Vec<String> = w.iter().map(u64::to_string).collect();
            out.push_str(&format!("\nwitness ({}): {}", w.len(), labels.join(" ")));
        }
        out
    }
}
