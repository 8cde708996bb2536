//! Genetic algorithm with fitness-proportionate selection and elitism.
//!
//! Each generation sorts the candidates weakest first, keeps the strongest
//! fraction, fills the rest of the mating pool by roulette draws and breeds
//! a new population of the same size. Optionally a share of the offspring
//! is replaced by fresh random genomes so the population keeps meeting new
//! material.

use rand::seq::SliceRandom;
use rand::Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::rng::{seeded, SimRng};

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GaConfig {
    /// Passed to [`GaHooks::crossover`] as the mixing ratio.
    pub crossover: f64,
    pub mutation: f64,
    /// Fraction of the population copied into the mating pool unchanged.
    pub elitism: f64,
    /// Probability that an offspring is swapped for a fresh genome.
    pub injection: f64,
}

impl Default for GaConfig {
    fn default() -> Self {
        Self {
            crossover: 0.5,
            mutation: 0.1,
            elitism: 0.2,
            injection: 0.0,
        }
    }
}

impl GaConfig {
    pub fn validate(&self) -> Result<()> {
        for (name, v) in [
            ("crossover", self.crossover),
            ("mutation", self.mutation),
            ("elitism", self.elitism),
            ("injection", self.injection),
        ] {
            if !(0.0..=1.0).contains(&v) {
                return Err(Error::invalid(format!("{name} = {v} is outside [0, 1]")));
            }
        }
        Ok(())
    }
}

/// Problem-specific operations. All randomness comes from the supplied RNG.
pub trait GaHooks {
    type Genome: Clone;

    /// A score in [0, 1], higher is fitter.
    fn fitness(&self, genome: &Self::Genome) -> f64;
    fn crossover(
        &self,
        a: &Self::Genome,
        b: &Self::Genome,
        mix: f64,
        rng: &mut SimRng,
    ) -> Self::Genome;
    fn mutate(&self, genome: &Self::Genome, rng: &mut SimRng) -> Self::Genome;
    fn fresh(&self, rng: &mut SimRng) -> Self::Genome;
}

/// Cumulative fitness shares for roulette draws.
#[derive(Debug, Clone, PartialEq)]
pub struct RouletteWheel {
    cumulative: Vec<f64>,
    degenerate: bool,
}

impl RouletteWheel {
    pub fn new(fitness: &[f64]) -> Result<Self> {
        if fitness.is_empty() {
            return Err(Error::invalid("roulette wheel needs at least one slot"));
        }
        let total: f64 = fitness.iter().sum();
        let denom = if total == 0.0 { 1.0 } else { total };
        let mut acc = 0.0;
        let cumulative = fitness
            .iter()
            .map(|f| {
                acc += f / denom;
                acc
            })
            .collect();
        Ok(Self {
            cumulative,
            degenerate: total == 0.0,
        })
    }

    pub fn cumulative(&self) -> &[f64] {
        &self.cumulative
    }

    /// Index of the first slot whose cumulative share exceeds a uniform
    /// draw. When no slot has any fitness the pick is uniform.
    pub fn spin(&self, rng: &mut SimRng) -> usize {
        if self.degenerate {
            return rng.random_range(0..self.cumulative.len());
        }
        loop {
            let x: f64 = rng.random();
            if let Some(i) = self.cumulative.iter().position(|&c| c > x) {
                return i;
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Population<G> {
    pub candidates: Vec<G>,
    pub generation: u64,
}

fn checked_fitness<H: GaHooks>(hooks: &H, g: &H::Genome) -> Result<f64> {
    let f = hooks.fitness(g);
    if (0.0..=1.0).contains(&f) {
        Ok(f)
    } else {
        Err(Error::invalid(format!("fitness {f} is outside [0, 1]")))
    }
}

impl<G: Clone> Population<G> {
    pub fn new(candidates: Vec<G>) -> Result<Self> {
        if candidates.is_empty() {
            return Err(Error::invalid("population is empty"));
        }
        Ok(Self {
            candidates,
            generation: 0,
        })
    }

    pub fn len(&self) -> usize {
        self.candidates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.candidates.is_empty()
    }

    pub fn average_fitness<H: GaHooks<Genome = G>>(&self, hooks: &H) -> f64 {
        self.candidates
            .iter()
            .map(|g| hooks.fitness(g))
            .sum::<f64>()
            / self.candidates.len() as f64
    }

    pub fn max_fitness<H: GaHooks<Genome = G>>(&self, hooks: &H) -> f64 {
        self.candidates
            .iter()
            .map(|g| hooks.fitness(g))
            .fold(f64::NEG_INFINITY, f64::max)
    }

    /// Builds the mating pool: elites first, then roulette picks.
    pub fn select<H: GaHooks<Genome = G>>(
        &self,
        config: &GaConfig,
        hooks: &H,
        rng: &mut SimRng,
    ) -> Result<Vec<G>> {
        let mut scored = self
            .candidates
            .iter()
            .map(|g| Ok((checked_fitness(hooks, g)?, g)))
            .collect::<Result<Vec<_>>>()?;
        scored.sort_by(|a, b| a.0.total_cmp(&b.0));
        let n = scored.len();
        let wheel = RouletteWheel::new(&scored.iter().map(|s| s.0).collect::<Vec<_>>())?;
        let elites = ((config.elitism * n as f64).ceil() as usize).min(n);
        let mut pool: Vec<G> = scored[n - elites..]
            .iter()
            .map(|(_, g)| (*g).clone())
            .collect();
        while pool.len() < n {
            pool.push(scored[wheel.spin(rng)].1.clone());
        }
        Ok(pool)
    }

    /// One generation. Every pool member is the first parent of exactly one
    /// child (in shuffled order); the second parent is drawn uniformly.
    pub fn evolve<H: GaHooks<Genome = G>>(
        &mut self,
        config: &GaConfig,
        hooks: &H,
        rng: &mut SimRng,
    ) -> Result<()> {
        config.validate()?;
        let mut pool = self.select(config, hooks, rng)?;
        pool.shuffle(rng);
        let mut next = Vec::with_capacity(pool.len());
        for first in &pool {
            let second = &pool[rng.random_range(0..pool.len())];
            let mut child = hooks.crossover(first, second, config.crossover, rng);
            if rng.random::<f64>() < config.mutation {
                child = hooks.mutate(&child, rng);
            }
            if config.injection > 0.0 && rng.random::<f64>() < config.injection {
                child = hooks.fresh(rng);
            }
            next.push(child);
        }
        self.candidates = next;
        self.generation += 1;
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GenerationStats {
    pub generation: u64,
    pub average: f64,
    pub max: f64,
}

/// Evolves for `generations` steps; the returned stats include generation 0.
pub fn run<H: GaHooks>(
    population: &mut Population<H::Genome>,
    config: &GaConfig,
    hooks: &H,
    generations: usize,
    rng: &mut SimRng,
) -> Result<Vec<GenerationStats>> {
    let stats = |p: &Population<H::Genome>| GenerationStats {
        generation: p.generation,
        average: p.average_fitness(hooks),
        max: p.max_fitness(hooks),
    };
    let mut out = vec![stats(population)];
    for _ in 0..generations {
        population.evolve(config, hooks, rng)?;
        out.push(stats(population));
    }
    Ok(out)
}

/// Bitstring problem whose fitness is the fraction of set bits.
#[derive(Debug, Clone, Copy)]
pub struct OneMax {
    pub length: usize,
}

impl GaHooks for OneMax {
    type Genome = Vec<bool>;

    fn fitness(&self, g: &Vec<bool>) -> f64 {
        if g.is_empty() {
            return 0.0;
        }
        g.iter().filter(|b| **b).count() as f64 / g.len() as f64
    }

    /// Uniform crossover: each bit comes from `b` with probability `mix`.
    fn crossover(&self, a: &Vec<bool>, b: &Vec<bool>, mix: f64, rng: &mut SimRng) -> Vec<bool> {
        a.iter()
            .zip(b)
            .map(|(&x, &y)| if rng.random::<f64>() < mix { y } else { x })
            .collect()
    }

    fn mutate(&self, g: &Vec<bool>, rng: &mut SimRng) -> Vec<bool> {
        let mut g = g.clone();
        if !g.is_empty() {
            let i = rng.random_range(0..g.len());
            g[i] = !g[i];
        }
        g
    }

    fn fresh(&self, rng: &mut SimRng) -> Vec<bool> {
        (0..self.length).map(|_| rng.random()).collect()
    }
}

/// A seeded random OneMax population.
pub fn onemax_population(
    size: usize,
    length: usize,
    seed: u64,
) -> Result<(Population<Vec<bool>>, SimRng)> {
    let mut rng = seeded(seed);
    let hooks = OneMax { length };
    let pop = Population::new((0..size).map(|_| hooks.fresh(&mut rng)).collect())?;
    Ok((pop, rng))
}
