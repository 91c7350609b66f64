use std::time::{Duration, Instant};

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exec::Executor;
use crate::graph::Graph;
use crate::io::write_graph6;

use super::checkpoint::Checkpoint;
use super::config::{MutationKind, OrderRange, SearchConfig};
use super::individual::{Individual, IndividualSummary};
use super::mutation::{init_ring_lattice, MutationError, Mutator};
use super::rng::{stream, StreamRng};
use super::select::{rank, select};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    Found,
    BudgetExhausted,
}

/// Population statistics after one generation (generation 0 is the
/// initial population).
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TraceEntry {
    pub generation: u64,
    pub best_fitness: f64,
    pub best_pair_count: u64,
    pub best_order: usize,
    pub mean_pair_count: f64,
}

impl TraceEntry {
    fn of(generation: u64, population: &[Individual]) -> Self {
        let best = &population[0];
        let total: u64 = population.iter().map(Individual::pair_count).sum();
        TraceEntry {
            generation,
            best_fitness: best.fitness.value(),
            best_pair_count: best.pair_count(),
            best_order: best.graph.order(),
            mean_pair_count: total as f64 / population.len() as f64,
        }
    }
}

#[derive(Clone, Debug)]
pub struct SearchResult {
    pub outcome: Outcome,
    /// Best individual seen in any generation.
    pub best: Individual,
    pub witness: Option<Graph>,
    /// Index of the last completed generation.
    pub generations_run: u64,
    pub evaluations: u64,
    pub wall_time: Duration,
    pub seed: u64,
    pub trace: Vec<TraceEntry>,
}

/// JSON form of a [`SearchResult`].
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SearchReport {
    pub outcome: Outcome,
    pub best: IndividualSummary,
    pub witness: Option<String>,
    pub generations_run: u64,
    pub evaluations: u64,
    pub seed: u64,
    pub trace: Vec<TraceEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub wall_time_secs: Option<f64>,
}

impl SearchResult {
    pub fn report(&self, with_time: bool) -> SearchReport {
        SearchReport {
            outcome: self.outcome,
            best: IndividualSummary::from(&self.best),
            witness: self.witness.as_ref().map(write_graph6),
            generations_run: self.generations_run,
            evaluations: self.evaluations,
            seed: self.seed,
            trace: self.trace.clone(),
            wall_time_secs: with_time.then_some(self.wall_time.as_secs_f64()),
        }
    }

    /// Everything except wall time; identical for identical config and seed.
    pub fn deterministic_json(&self) -> String {
        serde_json::to_string(&self.report(false)).expect("report serialises")
    }

    /// Best fitness never decreases along the trace.
    pub fn trace_monotone(&self) -> bool {
        self.trace
            .windows(2)
            .all(|w| w[1].best_pair_count <= w[0].best_pair_count)
    }
}

/// State handed to the observer after every generation.
pub struct Progress<'a> {
    pub config: &'a SearchConfig,
    pub generation: u64,
    pub evaluations: u64,
    /// Ranked, best first.
    pub population: &'a [Individual],
    pub trace: &'a [TraceEntry],
}

impl Progress<'_> {
    pub fn checkpoint(&self) -> Checkpoint {
        Checkpoint {
            config: self.config.clone(),
            seed: self.config.seed,
            generation: self.generation,
            evaluations: self.evaluations,
            population: Checkpoint::encode_population(self.population.iter().map(|i| &i.graph)),
            trace: self.trace.to_vec(),
        }
    }
}

/// Runs a search on an executor sized by `config.threads`.
pub fn search(config: &SearchConfig) -> Result<SearchResult> {
    let exec = Executor::parallel(config.threads)?;
    search_with(config, &exec, None, |_| {})
}

/// Full-control entry point: explicit executor, optional resume state and a
/// per-generation observer.
pub fn search_with<F>(
    config: &SearchConfig,
    exec: &Executor,
    resume: Option<&Checkpoint>,
    mut observer: F,
) -> Result<SearchResult>
where
    F: FnMut(&Progress<'_>),
{
    let range = config.validate()?;
    let start = Instant::now();
    let mutator = Mutator::new(config.retry_budget);
    let r = config.r as usize;

    let (mut population, mut generation, mut evaluations, mut trace) = match resume {
        Some(cp) => restore(config, range, cp, exec)?,
        None => {
            let pop = initial_population(config, range, &mutator, exec)?;
            let trace = vec![TraceEntry::of(0, &pop)];
            let evals = pop.len() as u64;
            (pop, 0, evals, trace)
        }
    };
    let mut best = population[0].clone();
    observer(&Progress {
        config,
        generation,
        evaluations,
        population: &population,
        trace: &trace,
    });

    loop {
        if population[0].pair_count() == 0 {
            break;
        }
        if config.max_generations.is_some_and(|g| generation >= g) {
            break;
        }
        if config
            .time_budget
            .is_some_and(|t| start.elapsed().as_secs_f64() >= t)
        {
            break;
        }
        generation += 1;
        let offspring = spawn_offspring(config, range, &mutator, generation, &population, exec);
        evaluations += offspring.len() as u64;
        population = select(
            &population,
            offspring,
            config.population_size,
            config.carryover_fraction,
        )?;
        if population[0].rank_key() < best.rank_key() {
            best = population[0].clone();
        }
        trace.push(TraceEntry::of(generation, &population));
        observer(&Progress {
            config,
            generation,
            evaluations,
            population: &population,
            trace: &trace,
        });
    }

    let found = best.pair_count() == 0;
    debug_assert!(!found || best.graph.is_regular() == Some(r));
    Ok(SearchResult {
        outcome: if found {
            Outcome::Found
        } else {
            Outcome::BudgetExhausted
        },
        witness: found.then(|| best.graph.clone()),
        best,
        generations_run: generation,
        evaluations,
        wall_time: start.elapsed(),
        seed: config.seed,
        trace,
    })
}

fn initial_population(
    config: &SearchConfig,
    range: OrderRange,
    mutator: &Mutator,
    exec: &Executor,
) -> Result<Vec<Individual>> {
    let lattice = init_ring_lattice(range.lo as usize, config.r as usize)?;
    let k = config
        .init_randomization_switches
        .unwrap_or(3 * lattice.edge_count());
    let mut pop = exec.map(config.population_size, |i| {
        let mut rng = stream(config.seed, 0, i as u64, 0);
        Individual::new(mutator.randomize(&lattice, k, &mut rng))
    });
    rank(&mut pop);
    Ok(pop)
}

type Restored = (Vec<Individual>, u64, u64, Vec<TraceEntry>);

fn restore(
    config: &SearchConfig,
    range: OrderRange,
    cp: &Checkpoint,
    exec: &Executor,
) -> Result<Restored> {
    if cp.seed != config.seed || cp.config.r != config.r {
        return Err(Error::Config(format!(
            "checkpoint was written for r = {}, seed = {}",
            cp.config.r, cp.seed
        )));
    }
    let graphs = cp.graphs()?;
    if graphs.is_empty() {
        return Err(Error::Input("checkpoint population is empty".into()));
    }
    for g in &graphs {
        let n = g.order() as u64;
        if g.is_regular() != Some(config.r as usize) || n < range.lo || n > range.hi {
            return Err(Error::Input(format!(
                "checkpoint graph of order {n} is not {}-regular within {}..={}",
                config.r, range.lo, range.hi
            )));
        }
    }
    let mut pop = exec.map(graphs.len(), |i| Individual::new(graphs[i].clone()));
    rank(&mut pop);
    Ok((pop, cp.generation, cp.evaluations, cp.trace.clone()))
}

fn spawn_offspring(
    config: &SearchConfig,
    range: OrderRange,
    mutator: &Mutator,
    generation: u64,
    parents: &[Individual],
    exec: &Executor,
) -> Vec<Individual> {
    // Round-robin over parents, so ties do not favour the first parent's
    // offspring.
    let n = parents.len();
    exec.map(n * config.offspring_factor, |t| {
        let (i, j) = (t % n, t / n);
        let mut rng = stream(config.seed, generation, i as u64, j as u64);
        mutate(config, range, mutator, &parents[i], &mut rng)
    })
}

/// One offspring; a copy of the parent when the drawn mutation is
/// unavailable.
fn mutate(
    config: &SearchConfig,
    range: OrderRange,
    mutator: &Mutator,
    parent: &Individual,
    rng: &mut StreamRng,
) -> Individual {
    let kinds = &config.mutation_set;
    let kind = if kinds.len() == 1 {
        kinds[0]
    } else {
        kinds[rng.random_range(0..kinds.len())]
    };
    match kind {
        MutationKind::EdgeSwitch => match mutator.pick_edge_switch(&parent.graph, rng) {
            Ok((e1, e2)) => parent.after_switch(e1, e2),
            Err(_) => parent.clone(),
        },
        MutationKind::Resize => resize(config.r, range, mutator, parent, rng)
            .map(Individual::new)
            .unwrap_or_else(|_| parent.clone()),
    }
}

fn resize(
    r: u64,
    range: OrderRange,
    mutator: &Mutator,
    parent: &Individual,
    rng: &mut StreamRng,
) -> std::result::Result<Graph, MutationError> {
    let g = &parent.graph;
    let n = g.order() as u64;
    let even = r.is_multiple_of(2);
    let step = if even { 1 } else { 2 };
    let grow = match (n + step <= range.hi, n >= range.lo + step) {
        (true, true) => rng.random_bool(0.5),
        (true, false) => true,
        (false, true) => false,
        (false, false) => return Err(MutationError::Unavailable),
    };
    match (grow, even) {
        (true, true) => mutator.add_vertex_even(g, rng),
        (false, true) => mutator.remove_vertex_even(g, rng),
        (true, false) => mutator.add_pair_odd(g, rng),
        (false, false) => mutator.remove_pair_odd(g, rng),
    }
}
