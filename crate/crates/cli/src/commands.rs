use std::io::BufReader;

use oppdc::construct::{
    block_graph_cover, builtin_fixture, complete_bipartite_cover, cycle_cover,
    cycle_partition_cover, ear_cover, product_cover, ConstructError, FixtureName,
};
use oppdc::cover::{
    emit_cover, emit_cycles, oppdc_to_socdc, socdc_to_oppdc, verify_oppdc, CoverError,
};
use oppdc::graph::{
    cartesian_product, emit_dot, emit_edge_list, emit_graph6, find_cycle_partition,
    find_ear_decomposition, Search,
};
use oppdc::hunter::scan_stream;
use oppdc::solver::{
    complete_graph_cover, solve_exhaustive, solve_structured_with_stats, SolveError,
};
use oppdc::{Budget, Graph, PathCover, SolveOutcome, SolveStatus};

use crate::input::{read_cover, read_cycles, read_graph, write_text, Failure};
use crate::{
    BudgetArgs, Command, ConstructArgs, ConvertArgs, Family, FilterArgs, FixtureArgs, ProductArgs,
    ReportFormat, SolveArgs, Target, VerifyArgs, EXIT_BUDGET, EXIT_INPUT, EXIT_INVALID, EXIT_UNSAT,
};

type Run = Result<u8, Failure>;

pub(crate) fn run(cmd: Command) -> Run {
    match cmd {
        Command::Construct(a) => construct(a),
        Command::Verify(a) => verify(a),
        Command::Solve(a) => solve(a),
        Command::Filter(a) => filter(a),
        Command::Product(a) => product(a),
        Command::Convert(a) => convert(a),
        Command::Fixture(a) => fixture(a),
    }
}

fn budget(b: &BudgetArgs) -> Result<Budget, Failure> {
    if b.budget_nodes == 0 || b.budget_ms == 0 {
        return Err(Failure::input("budgets must be positive"));
    }
    Ok(Budget::new(b.budget_nodes, b.budget_ms))
}

fn construct_failure(e: ConstructError) -> Failure {
    match e {
        ConstructError::NoCover(_) => Failure::with(EXIT_UNSAT, e.to_string()),
        ConstructError::Invalid(_) => Failure::with(EXIT_INVALID, e.to_string()),
        ConstructError::Completion(_) => Failure::with(EXIT_BUDGET, e.to_string()),
        _ => Failure::input(e.to_string()),
    }
}

fn solve_failure(e: SolveError) -> Failure {
    match e {
        SolveError::NoCover(_) => Failure::with(EXIT_UNSAT, e.to_string()),
        SolveError::BudgetExhausted => Failure::with(EXIT_BUDGET, e.to_string()),
        SolveError::Construct(c) => construct_failure(c),
        _ => Failure::input(e.to_string()),
    }
}

fn cover_failure(e: CoverError) -> Failure {
    let code = match e {
        CoverError::Invalid(_) => EXIT_INVALID,
        _ => EXIT_INPUT,
    };
    Failure::with(code, e.to_string())
}

fn need<T>(v: Option<T>, flag: &str, family: &str) -> Result<T, Failure> {
    v.ok_or_else(|| Failure::input(format!("family {family} needs --{flag}")))
}

fn emit(g: &Graph, c: &PathCover, graph_out: Option<&str>) -> Run {
    if let Some(path) = graph_out {
        write_text(path, &emit_edge_list(g))?;
    }
    print!("{}", emit_cover(c));
    Ok(0)
}

fn construct(a: ConstructArgs) -> Run {
    let out = a.graph_out.as_deref();
    match a.family {
        Family::Cycle => {
            let n = need(a.n, "n", "cycle")?;
            let c = cycle_cover(n).map_err(construct_failure)?;
            emit(&Graph::cycle(n), &c, out)
        }
        Family::Biclique => {
            let (n, m) = (need(a.n, "n", "biclique")?, need(a.m, "m", "biclique")?);
            let c = complete_bipartite_cover(n, m).map_err(construct_failure)?;
            emit(&Graph::complete_bipartite(n, m), &c, out)
        }
        Family::Complete => {
            let n = need(a.n, "n", "complete")?;
            let c = complete_graph_cover(n, budget(&a.budget)?).map_err(solve_failure)?;
            emit(&Graph::complete(n), &c, out)
        }
        Family::Product => product(ProductArgs {
            left: need(a.input, "input", "product")?,
            right: need(a.right, "right", "product")?,
            left_cover: None,
            right_cover: None,
            graph_out: a.graph_out,
            budget: a.budget,
        }),
        Family::BlockGraph => {
            let g = read_graph(&need(a.input, "input", "block-graph")?)?;
            let c = block_graph_cover(&g).map_err(construct_failure)?;
            emit(&g, &c, out)
        }
        Family::Fixture => {
            let name: FixtureName = need(a.name, "name", "fixture")?
                .parse()
                .map_err(construct_failure)?;
            let (g, c) = builtin_fixture(name);
            emit(&g, &c, out)
        }
        Family::CyclePartition => {
            let g = read_graph(&need(a.input, "input", "cycle-partition")?)?;
            let d = match find_cycle_partition(&g, a.budget.budget_nodes) {
                Search::Found(d) => d,
                Search::Exhausted => {
                    return Err(Failure::input(
                        "the graph has no qualifying cycle partition",
                    ))
                }
                Search::Incomplete => {
                    return Err(Failure::with(
                        EXIT_BUDGET,
                        "no cycle partition found within budget",
                    ))
                }
            };
            let (h, c) = cycle_partition_cover(&d).map_err(construct_failure)?;
            emit(&h, &c, out)
        }
        Family::Ear => {
            let g = read_graph(&need(a.input, "input", "ear")?)?;
            let d = match find_ear_decomposition(&g, true, a.budget.budget_nodes) {
                Ok(Search::Found(d)) => d,
                Ok(Search::Exhausted) => {
                    return Err(Failure::input(
                        "the graph has no decomposition into long ears",
                    ))
                }
                Ok(Search::Incomplete) => {
                    return Err(Failure::with(
                        EXIT_BUDGET,
                        "no ear decomposition found within budget",
                    ))
                }
                Err(e) => return Err(Failure::input(e.to_string())),
            };
            let (h, c) = ear_cover(&d).map_err(construct_failure)?;
            emit(&h, &c, out)
        }
    }
}

fn verify(a: VerifyArgs) -> Run {
    let g = read_graph(&a.graph)?;
    let c = read_cover(&a.cover)?;
    let report = verify_oppdc(&g, &c, !a.lenient).map_err(|e| Failure::input(e.to_string()))?;
    println!("{report}");
    Ok(if report.valid { 0 } else { EXIT_INVALID })
}

fn report_outcome(o: &SolveOutcome) -> u8 {
    eprintln!(
        "status {:?}, {} nodes, {} ms",
        o.status,
        o.nodes_explored,
        o.elapsed.as_millis()
    );
    match o.status {
        SolveStatus::Cover => {
            print!(
                "{}",
                emit_cover(o.cover.as_ref().expect("cover status carries a cover"))
            );
            0
        }
        SolveStatus::Unsat => EXIT_UNSAT,
        SolveStatus::BudgetExhausted => EXIT_BUDGET,
    }
}

fn solve(a: SolveArgs) -> Run {
    let g = read_graph(&a.input)?;
    let b = budget(&a.budget)?;
    let o = if a.exhaustive {
        solve_exhaustive(&g, b).map_err(solve_failure)?
    } else {
        let (o, stats) = solve_structured_with_stats(&g, b);
        eprintln!("{stats:?}");
        o
    };
    Ok(report_outcome(&o))
}

fn filter(a: FilterArgs) -> Run {
    let b = budget(&a.budget)?;
    let file =
        std::fs::File::open(&a.stream).map_err(|e| Failure::input(format!("{}: {e}", a.stream)))?;
    let scan = || scan_stream(BufReader::new(file), b);
    let summary = match a.jobs {
        Some(0) => return Err(Failure::input("--jobs must be positive")),
        Some(j) => rayon::ThreadPoolBuilder::new()
            .num_threads(j)
            .build()
            .map_err(|e| Failure::input(e.to_string()))?
            .install(scan),
        None => scan(),
    }
    .map_err(|e| Failure::input(format!("{}: {e}", a.stream)))?;
    match a.report {
        ReportFormat::Json => print!("{}", summary.to_json_lines()),
        ReportFormat::Text => print!("{}", summary.to_text()),
    }
    Ok(0)
}

fn factor_cover(g: &Graph, cover: Option<&str>, b: Budget) -> Result<PathCover, Failure> {
    if let Some(path) = cover {
        return read_cover(path);
    }
    let (o, _) = solve_structured_with_stats(g, b);
    match o.status {
        SolveStatus::Cover => Ok(o.cover.unwrap()),
        SolveStatus::Unsat => Err(Failure::with(EXIT_UNSAT, "a factor has no cover")),
        SolveStatus::BudgetExhausted => {
            Err(Failure::with(EXIT_BUDGET, "budget exhausted on a factor"))
        }
    }
}

fn product(a: ProductArgs) -> Run {
    let g = read_graph(&a.left)?;
    let h = read_graph(&a.right)?;
    let b = budget(&a.budget)?;
    let cg = factor_cover(&g, a.left_cover.as_deref(), b)?;
    let ch = factor_cover(&h, a.right_cover.as_deref(), b)?;
    let c = product_cover(&g, &cg, &h, &ch).map_err(construct_failure)?;
    emit(&cartesian_product(&g, &h), &c, a.graph_out.as_deref())
}

fn convert(a: ConvertArgs) -> Run {
    let g = read_graph(&a.graph)?;
    match a.to {
        Target::Graph6 => println!("{}", emit_graph6(&g)),
        Target::EdgeList => print!("{}", emit_edge_list(&g)),
        Target::Dot => {
            let c = a.cover.as_deref().map(read_cover).transpose()?;
            print!("{}", emit_dot(&g, c.as_ref()));
        }
        Target::Socdc => {
            let path = a
                .cover
                .ok_or_else(|| Failure::input("--to socdc needs --cover"))?;
            let c = read_cover(&path)?;
            let (apex_graph, cycles, apex) = oppdc_to_socdc(&g, &c).map_err(cover_failure)?;
            if let Some(out) = a.graph_out.as_deref() {
                write_text(out, &emit_edge_list(&apex_graph))?;
            }
            eprintln!("apex {apex}");
            print!("{}", emit_cycles(&cycles));
        }
        Target::Oppdc => {
            let path = a
                .cycles
                .ok_or_else(|| Failure::input("--to oppdc needs --cycles"))?;
            let cycles = read_cycles(&path)?;
            let apex = match a.apex {
                Some(x) => x,
                None => g
                    .order()
                    .checked_sub(1)
                    .ok_or_else(|| Failure::input("empty graph"))?,
            };
            let c = socdc_to_oppdc(&g, apex, &cycles).map_err(cover_failure)?;
            print!("{}", emit_cover(&c));
        }
    }
    Ok(0)
}

fn fixture(a: FixtureArgs) -> Run {
    let Some(name) = a.name else {
        for f in FixtureName::ALL {
            println!("{f}");
        }
        return Ok(0);
    };
    let name: FixtureName = name.parse().map_err(construct_failure)?;
    let (g, c) = builtin_fixture(name);
    if a.graph {
        print!("{}", emit_edge_list(&g));
    } else {
        print!("{}", emit_cover(&c));
    }
    Ok(0)
}
