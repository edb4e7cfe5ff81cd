use clap::{Args, Parser, Subcommand};

#[derive(Debug, Parser)]
#[command(
    name = "coalition-kit",
    version,
    about = "Coalition partitions, singleton coalition graphs and SC chains of small graphs",
    after_help = "Graphs are given as graph6 (--g6), one graph6 record per line (--file), \
or a named-graph expression (--named): K(n), Kbar(n), C(n), P(n), Kbip(a,b), corona_k3_k1, \
union(G,H), join(G,H); e.g. \"union(K(1), K(4))\" or \"join(K(2), Kbar(3))\".\n\n\
Exit codes: 0 success or true verdict, 1 false verdict, 2 usage or input error."
)]
pub struct Cli {
    /// Emit JSON Lines (one object per graph or report) instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    /// Worker threads for verify and sweep; defaults to available parallelism.
    #[arg(long, global = true, env = "COALITION_KIT_JOBS")]
    pub jobs: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Is the all-singletons partition a coalition partition?
    Sp(InputArgs),
    /// Exact coalition number with a witness partition.
    Cnum {
        #[command(flatten)]
        input: InputArgs,
        /// Plain restricted-growth-string search, skipping the SP shortcut.
        #[arg(long)]
        exhaustive: bool,
    },
    /// Coalition graph of a partition (all singletons by default).
    Cg {
        #[command(flatten)]
        input: InputArgs,
        /// Parts separated by `;`, vertices by `,`, e.g. "0,1;2;3".
        #[arg(long)]
        partition: Option<String>,
    },
    /// Singleton coalition graph chain and its length.
    Chain {
        #[command(flatten)]
        input: InputArgs,
        /// Maximum number of arrows before giving up.
        #[arg(long, default_value_t = coalition_core::chains::DEFAULT_MAX_STEPS)]
        max_steps: usize,
        /// Also match the chain against the known shapes (minimum degree at most 2).
        #[arg(long)]
        classify: bool,
    },
    /// Recognize or generate members of F1, H1, F2.k, H2.k.
    #[command(subcommand)]
    Family(FamilyCommand),
    /// Exhaustively check a characterization over enumerated graphs.
    Verify {
        /// Theorem id (thm1, thm2, thm4, thm6, obs7, thm8, thm9, thm13..thm17,
        /// lem18, lem19, lem-h23, thm20) or `all`.
        #[arg(long, default_value = "all")]
        theorem: String,
        /// Largest order checked (at most 7).
        #[arg(long, default_value_t = coalition_core::verify::DEFAULT_N_MAX)]
        n_max: usize,
    },
    /// Chain length and shape for many graphs.
    Sweep {
        #[command(flatten)]
        input: OptionalInputArgs,
        /// Smallest enumerated order (without an input source).
        #[arg(long, default_value_t = 1)]
        n_min: usize,
        /// Largest enumerated order (without an input source).
        #[arg(long, default_value_t = 6)]
        n_max: usize,
        /// Only graphs with this minimum degree.
        #[arg(long)]
        delta: Option<usize>,
        /// Only SP graphs.
        #[arg(long)]
        sp_only: bool,
    },
    /// Isomorphism test of exactly two graphs.
    Iso {
        /// Graph6 records.
        #[arg(long = "g6")]
        g6: Vec<String>,
        /// Named-graph expressions.
        #[arg(long)]
        named: Vec<String>,
        /// File with graph6 records, one per line.
        #[arg(long)]
        file: Option<std::path::PathBuf>,
    },
}

#[derive(Debug, Subcommand)]
pub enum FamilyCommand {
    /// Search for a witness; exit 1 when the graph is in none of the requested families.
    Recognize {
        #[command(flatten)]
        input: InputArgs,
        /// Family id (f1, h1, f2, h2, f2.1..f2.3, h2.1..h2.3); all when omitted.
        #[arg(long)]
        family: Option<String>,
    },
    /// Build a seeded member, e.g. "f2.3:L1=1,R1=0,R2=2,L2=0,W=1,seed=7".
    Generate {
        /// Family spec.
        spec: String,
    },
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct InputArgs {
    /// Named-graph expression.
    #[arg(long)]
    pub named: Option<String>,
    /// Graph6 record.
    #[arg(long = "g6")]
    pub g6: Option<String>,
    /// File with graph6 records, one per line.
    #[arg(long)]
    pub file: Option<std::path::PathBuf>,
}

#[derive(Debug, Args)]
#[group(required = false, multiple = false)]
pub struct OptionalInputArgs {
    /// Named-graph expression.
    #[arg(long)]
    pub named: Option<String>,
    /// Graph6 record.
    #[arg(long = "g6")]
    pub g6: Option<String>,
    /// File with graph6 records, one per line.
    #[arg(long)]
    pub file: Option<std::path::PathBuf>,
}

impl OptionalInputArgs {
    pub fn into_input(self) -> Option<InputArgs> {
        if self.named.is_none() && self.g6.is_none() && self.file.is_none() {
            None
        } else {
            Some(InputArgs { named: self.named, g6: self.g6, file: self.file })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::CommandFactory;

    #[test]
    fn grammar_is_consistent() {
        Cli::command().debug_assert();
    }

    #[test]
    fn one_input_source_only() {
        let r = Cli::try_parse_from(["coalition-kit", "sp", "--named", "C(4)", "--g6", "Cr"]);
        assert!(r.is_err());
        let r = Cli::try_parse_from(["coalition-kit", "sp"]);
        assert!(r.is_err());
    }

    #[test]
    fn global_flags_after_subcommand() {
        let cli = Cli::try_parse_from(["coalition-kit", "chain", "--named", "P(3)", "--json", "--jobs", "2"]).unwrap();
        assert!(cli.json);
        assert_eq!(cli.jobs, Some(2));
    }
}
