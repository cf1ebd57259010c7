mod system;

use std::cell::OnceCell;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, Context as _, Result};
use clap::{Args, Parser, Subcommand};
use ninfty_core::enumerate::{enumerate_with_progress, width, LayerReport, DEFAULT_MEMORY_CAP};
use ninfty_core::groups::{builtin, DEFAULT_ELEMENT_CAP};
use ninfty_core::lattice::load_lattice;
use ninfty_core::model::{self, analyze_intervals, ModelClass};
use ninfty_core::report::{self, DataSheet, PosetKind};
use ninfty_core::{classify, rubin, ClosureMode, EdgeSet, EnumerateConfig, EnumerationStore};
use ninfty_core::{GroupDataFile, KindRegistry, QuotientPoset, SubgroupLattice};

use system::parse_set;

/// Enumerate and classify transfer systems on subgroup lattices.
#[derive(Parser)]
#[command(name = "ninfty", version)]
struct Cli {
    #[command(flatten)]
    run: RunArgs,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct RunArgs {
    /// `builtin:<spec>` (e.g. builtin:cyclic:30) or a path to a data file.
    #[arg(long, global = true, conflicts_with = "file")]
    group: Option<String>,

    /// Path to a JSON data file.
    #[arg(long, global = true)]
    file: Option<PathBuf>,

    /// Worker threads (default: available parallelism).
    #[arg(long, global = true)]
    threads: Option<usize>,

    /// Per-layer progress on stderr.
    #[arg(long, short, global = true)]
    verbose: bool,

    /// Store size cap, e.g. 8G, 512M or a byte count.
    #[arg(long, global = true, value_parser = parse_size)]
    memory_cap: Option<usize>,

    /// Write output here instead of stdout.
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Full data sheet.
    Datasheet,
    /// Data sheet as a LaTeX tabular.
    DatasheetLatex,
    /// Number of closed sets of a kind.
    Count {
        #[arg(long, default_value = "all")]
        kind: String,
    },
    /// Minimal basis size of the complete transfer system.
    Width,
    /// Largest minimal basis size among systems of a kind.
    Complexity {
        #[arg(long, default_value = "all")]
        kind: String,
    },
    /// Layer sizes of the enumeration.
    Stats {
        #[arg(long, default_value = "all")]
        kind: String,
    },
    /// Systems whose minimal basis is as large as possible.
    MaximallyGenerated {
        #[arg(long, default_value = "all")]
        kind: String,
    },
    /// Every system of a kind, one per line.
    List {
        #[arg(long, default_value = "all")]
        kind: String,
    },
    /// Subgroup names and conjugacy classes.
    Dictionary,
    /// Properties of one transfer system.
    Classify {
        #[arg(long)]
        system: String,
    },
    /// Least transfer system containing the given pairs.
    Closure {
        #[arg(long)]
        system: String,
        /// Ignore conjugation.
        #[arg(long)]
        underlying: bool,
    },
    /// A minimal generating set.
    Basis {
        #[arg(long)]
        system: String,
    },
    /// Cyclic-group duality.
    Dual {
        #[arg(long)]
        system: String,
    },
    /// Least saturated system containing the input.
    Hull {
        #[arg(long)]
        system: String,
    },
    /// Largest cosaturated system inside the input.
    Core {
        #[arg(long)]
        system: String,
    },
    /// Pairs with the left lifting property.
    Leftset {
        #[arg(long)]
        system: String,
    },
    /// Premodel, composition-closed, Quillen, weak-equivalence-type and
    /// compatible-pair counts.
    ModelCount,
    /// 0, 1 or 2 for a pair AF ⊆ F.
    ModelCheck {
        #[arg(long)]
        af: String,
        #[arg(long)]
        f: String,
    },
    /// Whether Tm ⊆ Ta is a compatible pair.
    Compatible {
        #[arg(long)]
        m: String,
        #[arg(long)]
        a: String,
    },
    /// Every pair of store indices (i,j) with system i inside system j.
    Intervals,
    /// Sage constructor for an order on transfer systems.
    SagePoset {
        #[arg(long, default_value = "transfer")]
        which: PosetKind,
    },
    /// TikZ picture of a set of pairs.
    Tikz {
        #[arg(long, default_value = "")]
        system: String,
    },
    /// Load and validate the lattice.
    Validate,
    /// Write the lattice as a JSON data file.
    Export,
    /// Time each stage of the data sheet.
    Bench,
}

fn parse_size(s: &str) -> std::result::Result<usize, String> {
    let t = s.trim();
    let (digits, shift) = match t.chars().last() {
        Some('K' | 'k') => (&t[..t.len() - 1], 10),
        Some('M' | 'm') => (&t[..t.len() - 1], 20),
        Some('G' | 'g') => (&t[..t.len() - 1], 30),
        _ => (t, 0),
    };
    let n: usize = digits.parse().map_err(|_| format!("`{s}` is not a size"))?;
    match n.checked_shl(shift) {
        Some(v) if v > 0 && v >> shift == n => Ok(v),
        _ => Err(format!("`{s}` is not a positive size")),
    }
}

struct Context {
    lattice: SubgroupLattice,
    config: EnumerateConfig,
    verbose: bool,
    all: OnceCell<EnumerationStore>,
}

impl Context {
    fn new(run: &RunArgs) -> Result<Self> {
        let lattice = match (&run.group, &run.file) {
            (Some(g), _) => match g.strip_prefix("builtin:") {
                Some(spec) => builtin(spec, DEFAULT_ELEMENT_CAP)?,
                None => load_lattice(g)?,
            },
            (None, Some(path)) => load_lattice(path)?,
            (None, None) => bail!("no group given; use --group builtin:<spec> or --file <path>"),
        };
        let workers = match run.threads {
            Some(0) => bail!("--threads must be at least 1"),
            Some(n) => n,
            None => std::thread::available_parallelism().map_or(1, |n| n.get()),
        };
        Ok(Context {
            lattice,
            config: EnumerateConfig {
                workers,
                memory_cap: run.memory_cap.unwrap_or(DEFAULT_MEMORY_CAP),
            },
            verbose: run.verbose,
            all: OnceCell::new(),
        })
    }

    fn store(&self, kind: &str) -> Result<EnumerationStore> {
        let verbose = self.verbose;
        let mut progress = |r: LayerReport| {
            if verbose {
                eprintln!(
                    "[{kind}] layer {}: {} new, {} total",
                    r.layer, r.layer_size, r.total
                );
            }
        };
        Ok(enumerate_with_progress(
            &self.lattice,
            kind,
            &self.config,
            &mut progress,
        )?)
    }

    fn all(&self) -> Result<&EnumerationStore> {
        if let Some(s) = self.all.get() {
            return Ok(s);
        }
        let s = self.store("all")?;
        Ok(self.all.get_or_init(|| s))
    }

    /// Parses `text` and insists that it is a transfer system.
    fn transfer_system(&self, text: &str) -> Result<EdgeSet> {
        let set = parse_set(text, &self.lattice)?;
        if !rubin::is_transfer_system(&set, &self.lattice, ClosureMode::Full) {
            bail!(
                "{} is not a transfer system (its closure is {})",
                self.lattice.format_set(&set),
                self.lattice
                    .format_set(&rubin::closure(&set, &self.lattice, ClosureMode::Full))
            );
        }
        Ok(set)
    }

    fn fmt(&self, set: &EdgeSet) -> String {
        self.lattice.format_set(set) + "\n"
    }
}

fn statistics(values: &[usize]) -> String {
    let v: Vec<String> = values.iter().map(usize::to_string).collect();
    format!("{{{}}}\n", v.join(","))
}

fn run(cli: &Cli) -> Result<String> {
    let cx = Context::new(&cli.run)?;
    let l = &cx.lattice;
    let out = match &cli.command {
        Command::Datasheet => DataSheet::from_store(l, cx.all()?, &cx.config)?.to_text(),
        Command::DatasheetLatex => DataSheet::from_store(l, cx.all()?, &cx.config)?.to_latex(),
        Command::Count { kind } => format!("{}\n", cx.store(kind)?.len()),
        Command::Width => format!("{}\n", width(l)),
        Command::Complexity { kind } => format!("{}\n", cx.store(kind)?.complexity()),
        Command::Stats { kind } => statistics(&cx.store(kind)?.generation_statistics()),
        Command::MaximallyGenerated { kind } => {
            let store = cx.store(kind)?;
            let fmt = formatter(&cx, kind)?;
            store.maximally_generated().into_iter().map(fmt).collect()
        }
        Command::List { kind } => {
            let store = cx.store(kind)?;
            let fmt = formatter(&cx, kind)?;
            store.systems().map(fmt).collect()
        }
        Command::Dictionary => report::subgroup_dictionary(l),
        Command::Classify { system } => {
            let t = cx.transfer_system(system)?;
            let basis = rubin::find_basis(&t, l, ClosureMode::Full);
            let f = classify::minimal_fibrant_subgroup(&t, l);
            let mut s = String::new();
            s += &format!("system={}", cx.fmt(&t));
            s += &format!("basis={}", cx.fmt(&basis));
            s += &format!("basis size={}\n", basis.len());
            s += &format!("saturated={}\n", classify::is_saturated(&t, l));
            s += &format!("cosaturated={}\n", classify::is_cosaturated(&t, l));
            s += &format!("flat={}\n", classify::is_flat(&t, l));
            s += &format!("minimal fibrant subgroup={f} ({})\n", l.node_names()[f]);
            s += &format!(
                "saturated hull={}",
                cx.fmt(&classify::saturated_hull(&t, l))
            );
            s += &format!(
                "cosaturated core={}",
                cx.fmt(&classify::cosaturated_core(&t, l))
            );
            if l.divisor_duality().is_some() {
                s += &format!("dual={}", cx.fmt(&classify::dual(&t, l)));
            }
            s += &format!("left set={}", cx.fmt(&classify::left_set(&t, l)));
            s
        }
        Command::Closure { system, underlying } => {
            let mode = if *underlying {
                ClosureMode::Underlying
            } else {
                ClosureMode::Full
            };
            cx.fmt(&rubin::closure(&parse_set(system, l)?, l, mode))
        }
        Command::Basis { system } => cx.fmt(&rubin::find_basis(
            &cx.transfer_system(system)?,
            l,
            ClosureMode::Full,
        )),
        Command::Dual { system } => {
            if l.divisor_duality().is_none() {
                bail!("duality needs a divisor lattice (a cyclic group)");
            }
            cx.fmt(&classify::dual(&cx.transfer_system(system)?, l))
        }
        Command::Hull { system } => cx.fmt(&classify::saturated_hull(&parse_set(system, l)?, l)),
        Command::Core { system } => {
            cx.fmt(&classify::cosaturated_core(&cx.transfer_system(system)?, l))
        }
        Command::Leftset { system } => cx.fmt(&classify::left_set(&cx.transfer_system(system)?, l)),
        Command::ModelCount => {
            let c = analyze_intervals(cx.all()?, l, &cx.config)?.counts;
            format!(
                "#Premodel structures={}\n#Composition closed structures={}\n#Quillen structures={}\n#Weak equivalence types={}\n#Compatible pairs={}\n",
                c.premodel, c.composition_closed, c.quillen, c.weak_equivalence_types, c.compatible
            )
        }
        Command::ModelCheck { af, f } => {
            let class = model::model_check(&cx.transfer_system(af)?, &cx.transfer_system(f)?, l)?;
            format!("{}\n", class.code())
        }
        Command::Compatible { m, a } => {
            let ok = model::is_compatible(&cx.transfer_system(m)?, &cx.transfer_system(a)?, l)?;
            format!("{ok}\n")
        }
        Command::Intervals => model::intervals(cx.all()?)
            .iter()
            .map(|p| format!("({},{})\n", p.af_index, p.f_index))
            .collect(),
        Command::SagePoset { which } => report::sage_poset(cx.all()?, l, *which, &cx.config)?,
        Command::Tikz { system } => report::edges_to_tikz(&parse_set(system, l)?, l, None)?,
        Command::Validate => {
            let q = QuotientPoset::of(l)?;
            format!(
                "ok: {} ({} subgroups, {} conjugacy classes, {} comparable pairs, {} edge orbits)\n",
                l.name(),
                l.node_count(),
                q.class_count(),
                l.edge_count(),
                l.edge_orbits().len()
            )
        }
        Command::Export => GroupDataFile::from(l).to_json() + "\n",
        Command::Bench => bench(&cx)?,
    };
    Ok(out)
}

/// CONJUGACY stores index edges of the class poset, not of the lattice.
type Formatter<'a> = Box<dyn Fn(&EdgeSet) -> String + 'a>;

fn formatter<'a>(cx: &'a Context, kind: &str) -> Result<Formatter<'a>> {
    KindRegistry::default().get(kind)?;
    Ok(match kind {
        "conjugacy" => {
            let q = QuotientPoset::of(&cx.lattice)?;
            Box::new(move |t: &EdgeSet| {
                let pairs: Vec<_> = t.iter().map(|e| q.edge(e)).collect();
                ninfty_core::lattice::format_pairs(&pairs) + "\n"
            })
        }
        "saturated" => {
            let op = cx.lattice.opposite().lattice;
            Box::new(move |t: &EdgeSet| op.format_set(t) + "\n")
        }
        _ => Box::new(move |t: &EdgeSet| cx.fmt(t)),
    })
}

fn bench(cx: &Context) -> Result<String> {
    let l = &cx.lattice;
    let mut s = String::new();
    let mut stage = |name: &str, f: &mut dyn FnMut() -> Result<String>| -> Result<()> {
        let t = Instant::now();
        let value = f()?;
        s += &format!("{name}: {value} ({:.3}s)\n", t.elapsed().as_secs_f64());
        Ok(())
    };
    let start = Instant::now();
    stage("all", &mut || Ok(cx.all()?.len().to_string()))?;
    for kind in ["cosaturated", "saturated"] {
        stage(kind, &mut || Ok(cx.store(kind)?.len().to_string()))?;
    }
    stage("width", &mut || Ok(width(l).to_string()))?;
    stage("flat", &mut || {
        Ok(cx
            .all()?
            .systems()
            .filter(|t| classify::is_flat(t, l))
            .count()
            .to_string())
    })?;
    stage("intervals", &mut || {
        let a = analyze_intervals(cx.all()?, l, &cx.config)?;
        let quillen = a
            .records
            .iter()
            .filter(|r| r.class == ModelClass::Quillen)
            .count();
        Ok(format!("{} premodel, {quillen} Quillen", a.counts.premodel))
    })?;
    s += &format!(
        "total: {:.3}s on {} workers\n",
        start.elapsed().as_secs_f64(),
        cx.config.workers
    );
    Ok(s)
}

/// One line, with each cause appended unless an earlier message already
/// quotes it.
fn diagnostic(e: &anyhow::Error) -> String {
    let mut line = String::new();
    for cause in e.chain() {
        let text = cause.to_string();
        if !line.contains(&text) {
            if !line.is_empty() {
                line.push_str(": ");
            }
            line.push_str(&text);
        }
    }
    line.replace('\n', " ")
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = run(&cli).and_then(|text| match &cli.run.output {
        Some(path) => {
            std::fs::write(path, text).with_context(|| format!("cannot write {}", path.display()))
        }
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            Ok(stdout.flush()?)
        }
    });
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("ninfty: {}", diagnostic(&e));
            ExitCode::FAILURE
        }
    }
}
