//! Command-line arguments. The parsed tree is also the run configuration
//! printed by `--dump-config`.

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

#[derive(Parser, Clone, Debug, PartialEq, Serialize, Deserialize)]
#[command(name = "fdw", version, about = "Boundary-generated errors of leap-frog type schemes")]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,

    /// Write output here instead of stdout.
    #[arg(long, short, global = true)]
    pub output: Option<String>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    pub format: Format,

    /// Print the parsed configuration as JSON and exit.
    #[arg(long, global = true)]
    #[serde(skip)]
    pub dump_config: bool,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Csv,
    Json,
}

#[derive(Args, Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SchemeArgs {
    /// Bulk scheme: leapfrog, dissipative, manufactured.
    #[arg(long, default_value = "leapfrog")]
    pub bulk: String,

    /// Courant number, e.g. -1/2 or -0.5.
    #[arg(long, allow_hyphen_values = true)]
    pub courant: String,

    /// Relaxation parameter of the dissipative scheme.
    #[arg(long)]
    pub omega: Option<String>,

    /// Boundary preset (`name` or `name:param`) or a scheme JSON file.
    /// Defaults to dirichlet for the manufactured bulk, upwind otherwise.
    #[arg(long)]
    pub boundary: Option<String>,

    /// Accept any |C| < 1 for the leap-frog bulk.
    #[arg(long)]
    pub allow_any_courant: bool,
}

impl SchemeArgs {
    pub fn boundary_spec(&self) -> &str {
        match &self.boundary {
            Some(b) => b,
            None if self.bulk.eq_ignore_ascii_case("manufactured") => "dirichlet",
            None => "upwind",
        }
    }
}

#[derive(Subcommand, Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "command")]
pub enum Command {
    /// Error recurrence from corner data; CSV `n,j,value`.
    Simulate {
        #[command(flatten)]
        #[serde(flatten)]
        scheme: SchemeArgs,
        #[arg(long)]
        nmax: usize,
        /// Last cell; defaults to the full support.
        #[arg(long)]
        jmax: Option<usize>,
        /// Only these times (comma separated).
        #[arg(long, value_delimiter = ',')]
        snapshots: Vec<usize>,
        /// Rational arithmetic; values printed as fractions.
        #[arg(long)]
        exact: bool,
    },
    /// Leap-frog solution of the transport equation and its empirical order.
    PdeDemo {
        #[command(flatten)]
        #[serde(flatten)]
        scheme: SchemeArgs,
        /// Mesh sizes (comma separated, rationals allowed).
        #[arg(long, value_delimiter = ',', default_values_t = ["1/1000".to_string(), "1/2000".to_string(), "1/4000".to_string()])]
        dx: Vec<String>,
        #[arg(long, default_value_t = 1.0)]
        t_final: f64,
    },
    /// Zone predictor at one point.
    Predict {
        #[command(flatten)]
        #[serde(flatten)]
        scheme: SchemeArgs,
        #[command(flatten)]
        #[serde(flatten)]
        probe: ProbeArgs,
        #[arg(long)]
        n: usize,
    },
    /// Simulation against prediction along a probe; CSV `n,j,zone,simulated,predicted,abs_err,scaled_err`.
    Compare {
        #[command(flatten)]
        #[serde(flatten)]
        scheme: SchemeArgs,
        #[command(flatten)]
        #[serde(flatten)]
        probe: ProbeArgs,
        #[arg(long)]
        nmax: usize,
        /// Times to compare; defaults to nmax/8, nmax/4, nmax/2, nmax.
        #[arg(long, value_delimiter = ',')]
        ns: Vec<usize>,
    },
    /// Boundary stability verdict as JSON.
    Stability {
        #[command(flatten)]
        #[serde(flatten)]
        scheme: SchemeArgs,
        #[arg(long, default_value_t = fdw_core::stability::DEFAULT_DELTA)]
        delta: f64,
        #[arg(long, default_value_t = fdw_core::stability::DEFAULT_GRID)]
        grid: usize,
    },
    /// Limit of the l2 norm, optionally against a simulation.
    L2 {
        #[command(flatten)]
        #[serde(flatten)]
        scheme: SchemeArgs,
        #[arg(long)]
        nmax: Option<usize>,
    },
    /// Zeroth, alternating and first moments against their asymptotes.
    Moments {
        #[command(flatten)]
        #[serde(flatten)]
        scheme: SchemeArgs,
        #[arg(long)]
        nmax: usize,
        #[arg(long, value_delimiter = ',')]
        ns: Vec<usize>,
    },
    /// Whole-line Green function rows; CSV `n,j,value`.
    Green {
        #[arg(long, allow_hyphen_values = true)]
        courant: String,
        #[arg(long, default_value = "second")]
        which: String,
        #[arg(long)]
        nmax: usize,
        #[arg(long, value_delimiter = ',')]
        snapshots: Vec<usize>,
    },
    /// Partial sums of the squared Green trace; CSV `N,partial_sum`.
    Trace {
        #[arg(long, allow_hyphen_values = true)]
        courant: String,
        #[arg(long)]
        nmax: usize,
        /// Row stride.
        #[arg(long)]
        every: Option<usize>,
    },
    /// Fitted l^p growth exponents against the heuristic.
    LpScan {
        #[command(flatten)]
        #[serde(flatten)]
        scheme: SchemeArgs,
        #[arg(long, value_delimiter = ',', default_values_t = ["1".to_string(), "2".to_string(), "3".to_string(), "4".to_string(), "6".to_string(), "8".to_string(), "inf".to_string()])]
        p: Vec<String>,
        #[arg(long, value_delimiter = ',', default_values_t = [2000usize, 4000, 8000])]
        ns: Vec<usize>,
    },
    /// Exact oracles against the recurrences.
    OracleCheck {
        /// upwind-explicit, manufactured or all.
        #[arg(long, default_value = "all")]
        which: String,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, default_values_t = ["-1/2".to_string(), "-3/4".to_string()])]
        courant: Vec<String>,
    },
}

#[derive(Args, Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ProbeArgs {
    /// auto, near-wall, transition, front, gaussian.
    #[arg(long, default_value = "auto")]
    pub zone: String,
    /// stable or unstable.
    #[arg(long, default_value = "stable")]
    pub mode: String,
    /// Fixed cell index.
    #[arg(long)]
    pub j: Option<usize>,
    /// Group velocity p/q; the probe is (n, j) = (q m, p m).
    #[arg(long)]
    pub nu: Option<String>,
    /// Offset from the front or Gaussian centre.
    #[arg(long, allow_hyphen_values = true, default_value_t = 0)]
    pub offset: i64,
}
