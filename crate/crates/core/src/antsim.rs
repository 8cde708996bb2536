//! Ant-colony foraging.
//!
//! Every ant follows four rules: roam, track nearby pheromone trails,
//! harvest nearby food and haul it home while marking the way. With several
//! colonies in one world, each colony's hoard doubles as a food source that
//! rival ants can raid.
//!
//! One RNG stream drives the whole world. Per step, colonies are updated in
//! index order and ants in stored order; a foraging ant draws two numbers
//! while roaming, one per pheromone within reach while tracking and one
//! while hauling food.

use std::f64::consts::TAU;
use std::fmt::Write as _;
use std::io::Write;

use rand::Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::rng::{seeded, SimRng};

pub const EVAPORATION: f64 = 0.99;
pub const EVAPORATION_CUTOFF: f64 = 0.01;
const ROAM_JITTER: f64 = 0.3;
const DROP_CHANCE: f64 = 0.5;
const HOME_RESET: f64 = 10.0;
const UNLOAD_DISTANCE: f64 = 5.0;
const SCENT_REACH: f64 = 30.0;
const STEER_EPSILON: f64 = 0.0001;

/// One evaporation tick.
pub fn evaporate(strength: f64, m: f64) -> f64 {
    if strength > EVAPORATION_CUTOFF {
        strength * m
    } else {
        0.0
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Food {
    pub x: f64,
    pub y: f64,
    pub amount: u32,
}

impl Food {
    pub fn reach(&self) -> f64 {
        reach(self.amount)
    }
}

fn reach(amount: u32) -> f64 {
    (amount as f64 / 2.0).max(1.0)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Pheromone {
    pub x: f64,
    pub y: f64,
    pub strength: f64,
}

impl Pheromone {
    pub fn new(x: f64, y: f64) -> Self {
        Self {
            x,
            y,
            strength: 1.0,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Ant {
    pub x: f64,
    pub y: f64,
    pub v: [f64; 2],
    pub carrying: bool,
    pub trail: Vec<Pheromone>,
    /// Steps spent roaming without success.
    pub roaming: f64,
}

impl Ant {
    pub fn new(x: f64, y: f64, roaming: f64) -> Self {
        Self {
            x,
            y,
            v: [0.0, 0.0],
            carrying: false,
            trail: Vec::new(),
            roaming,
        }
    }

    fn distance(&self, x: f64, y: f64) -> f64 {
        ((self.x - x).powi(2) + (self.y - y).powi(2)).sqrt()
    }

    fn steer(&mut self, x: f64, y: f64) {
        let d = self.distance(x, y) + STEER_EPSILON;
        self.v = [(x - self.x) / d, (y - self.y) / d];
        self.roaming = 0.0;
    }
}

/// Another colony's hoard as seen by a raiding ant.
#[derive(Debug, Clone, PartialEq)]
pub struct Depot {
    pub x: f64,
    pub y: f64,
    pub hoard: u32,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Colony {
    pub x: f64,
    pub y: f64,
    pub radius: f64,
    pub ants: Vec<Ant>,
    pub sources: Vec<Food>,
    pub hoard: u32,
}

impl Colony {
    /// Each ant starts at home with a random roaming counter in [0, 100).
    pub fn new(x: f64, y: f64, radius: f64, size: usize, rng: &mut SimRng) -> Self {
        let ants = (0..size)
            .map(|_| Ant::new(x, y, rng.random::<f64>() * 100.0))
            .collect();
        Self {
            x,
            y,
            radius,
            ants,
            sources: Vec::new(),
            hoard: 0,
        }
    }

    pub fn pheromones(&self) -> impl Iterator<Item = &Pheromone> {
        self.ants.iter().flat_map(|a| a.trail.iter())
    }

    pub fn pheromone_count(&self) -> usize {
        self.ants.iter().map(|a| a.trail.len()).sum()
    }

    pub fn carrying(&self) -> usize {
        self.ants.iter().filter(|a| a.carrying).count()
    }

    pub fn source_units(&self) -> u64 {
        self.sources.iter().map(|f| f.amount as u64).sum()
    }

    pub fn evaporate_trails(&mut self) {
        for ant in &mut self.ants {
            for p in &mut ant.trail {
                p.strength = evaporate(p.strength, EVAPORATION);
            }
            ant.trail.retain(|p| p.strength != 0.0);
        }
    }

    /// Evaporates every trail, then lets each ant forage.
    pub fn update(&mut self, speed: f64, rng: &mut SimRng) {
        self.update_with_depots(speed, rng, &mut []);
    }

    pub fn update_with_depots(&mut self, speed: f64, rng: &mut SimRng, depots: &mut [Depot]) {
        self.evaporate_trails();
        for i in 0..self.ants.len() {
            self.forage(i, speed, rng, depots);
        }
    }

    /// One step of ant `i`.
    pub fn forage(&mut self, i: usize, speed: f64, rng: &mut SimRng, depots: &mut [Depot]) {
        if !self.ants[i].carrying {
            self.roam(i, rng);
            self.track(i, rng);
            self.harvest(i, depots);
        } else {
            self.haul(i, rng);
        }
        let ant = &mut self.ants[i];
        ant.v[0] = ant.v[0].clamp(-speed, speed);
        ant.v[1] = ant.v[1].clamp(-speed, speed);
        ant.x += ant.v[0];
        ant.y += ant.v[1];
    }

    fn roam(&mut self, i: usize, rng: &mut SimRng) {
        let (hx, hy, radius) = (self.x, self.y, self.radius);
        let ant = &mut self.ants[i];
        ant.v[0] += ROAM_JITTER * (rng.random::<f64>() * 2.0 - 1.0);
        ant.v[1] += ROAM_JITTER * (rng.random::<f64>() * 2.0 - 1.0);
        ant.roaming += 1.0;
        if ant.roaming > radius {
            ant.steer(hx, hy);
        }
        if ant.distance(hx, hy) < HOME_RESET {
            ant.roaming = 0.0;
        }
    }

    fn track(&mut self, i: usize, rng: &mut SimRng) {
        let (ax, ay) = (self.ants[i].x, self.ants[i].y);
        let mut target = None;
        for p in self.pheromones() {
            let d = ((ax - p.x).powi(2) + (ay - p.y).powi(2)).sqrt();
            if d < p.strength * SCENT_REACH && rng.random::<f64>() < p.strength {
                target = Some((p.x, p.y));
            }
        }
        if let Some((x, y)) = target {
            self.ants[i].steer(x, y);
        }
    }

    /// Takes one unit from the first source in reach: own sources first,
    /// then rival hoards.
    fn harvest(&mut self, i: usize, depots: &mut [Depot]) {
        let (ax, ay) = (self.ants[i].x, self.ants[i].y);
        let dist = |x: f64, y: f64| ((ax - x).powi(2) + (ay - y).powi(2)).sqrt();
        let mut site = None;
        if let Some(k) = self.sources.iter().position(|f| dist(f.x, f.y) < f.reach()) {
            let f = &mut self.sources[k];
            f.amount -= 1;
            site = Some((f.x, f.y));
            if f.amount == 0 {
                self.sources.remove(k);
            }
        } else if let Some(d) = depots
            .iter_mut()
            .find(|d| d.hoard > 0 && dist(d.x, d.y) < reach(d.hoard))
        {
            d.hoard -= 1;
            site = Some((d.x, d.y));
        }
        if let Some((x, y)) = site {
            let ant = &mut self.ants[i];
            ant.trail.clear();
            ant.trail.push(Pheromone::new(x, y));
            ant.trail.push(Pheromone::new(ax, ay));
            ant.carrying = true;
        }
    }

    fn haul(&mut self, i: usize, rng: &mut SimRng) {
        let (hx, hy) = (self.x, self.y);
        let ant = &mut self.ants[i];
        ant.steer(hx, hy);
        if rng.random::<f64>() < DROP_CHANCE {
            let (x, y) = (ant.x, ant.y);
            ant.trail.push(Pheromone::new(x, y));
        }
        if ant.distance(hx, hy) < UNLOAD_DISTANCE {
            ant.carrying = false;
            self.hoard += 1;
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct World {
    pub width: f64,
    pub height: f64,
    pub speed: f64,
    pub colonies: Vec<Colony>,
    pub seed: u64,
    pub step: u64,
    #[serde(skip)]
    rng: SimRng,
}

impl World {
    pub fn new(width: f64, height: f64, seed: u64) -> Self {
        Self {
            width,
            height,
            speed: 1.0,
            colonies: Vec::new(),
            seed,
            step: 0,
            rng: seeded(seed),
        }
    }

    pub fn rng(&mut self) -> &mut SimRng {
        &mut self.rng
    }

    pub fn add_colony(&mut self, x: f64, y: f64, radius: f64, size: usize) -> usize {
        let c = Colony::new(x, y, radius, size, &mut self.rng);
        self.colonies.push(c);
        self.colonies.len() - 1
    }

    /// Scatters `count` sources of `amount` units uniformly over the world.
    pub fn scatter_food(&mut self, colony: usize, count: usize, amount: u32) {
        for _ in 0..count {
            let x = self.rng.random::<f64>() * self.width;
            let y = self.rng.random::<f64>() * self.height;
            self.colonies[colony].sources.push(Food { x, y, amount });
        }
    }

    /// One colony of `ants` at the center of a 400×400 world with `sources`
    /// random 10-unit food sources.
    pub fn single(seed: u64, ants: usize, sources: usize) -> Self {
        let mut w = World::new(400.0, 400.0, seed);
        w.add_colony(200.0, 200.0, 200.0, ants);
        w.scatter_food(0, sources, 10);
        w
    }

    /// `colonies` rival colonies evenly spaced on a circle in a 600×600
    /// world, each with its own random food sources.
    pub fn antagonism(seed: u64, colonies: usize, ants: usize, sources: usize) -> Self {
        let mut w = World::new(600.0, 600.0, seed);
        for i in 0..colonies {
            let a = TAU * i as f64 / colonies as f64;
            w.add_colony(
                300.0 + 150.0 * a.cos(),
                300.0 + 150.0 * a.sin(),
                200.0,
                ants,
            );
        }
        for i in 0..colonies {
            w.scatter_food(i, sources, 10);
        }
        w
    }

    /// Σ source units + Σ carried units + Σ hoards.
    pub fn total_food(&self) -> u64 {
        self.colonies
            .iter()
            .map(|c| c.source_units() + c.carrying() as u64 + c.hoard as u64)
            .sum()
    }

    /// Updates every colony in index order; rival hoards are raidable.
    pub fn step(&mut self) -> Result<()> {
        if self.colonies.is_empty() {
            return Err(Error::invalid("world has no colonies"));
        }
        for i in 0..self.colonies.len() {
            let others: Vec<usize> = (0..self.colonies.len()).filter(|&j| j != i).collect();
            let mut depots: Vec<Depot> = others
                .iter()
                .map(|&j| {
                    let c = &self.colonies[j];
                    Depot {
                        x: c.x,
                        y: c.y,
                        hoard: c.hoard,
                    }
                })
                .collect();
            let speed = self.speed;
            self.colonies[i].update_with_depots(speed, &mut self.rng, &mut depots);
            for (&j, d) in others.iter().zip(depots) {
                self.colonies[j].hoard = d.hoard;
            }
        }
        self.step += 1;
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct TraceOptions {
    pub positions: bool,
}

#[derive(Serialize)]
struct ColonyHeader {
    x: f64,
    y: f64,
    radius: f64,
    ants: usize,
    sources: usize,
    food: u64,
}

#[derive(Serialize)]
struct Header {
    kind: &'static str,
    seed: u64,
    steps: u64,
    width: f64,
    height: f64,
    speed: f64,
    colonies: Vec<ColonyHeader>,
}

#[derive(Serialize)]
struct Record {
    step: u64,
    colony: usize,
    hoard: u32,
    carrying: usize,
    pheromones: usize,
    sources: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    positions: Option<Vec<[f64; 2]>>,
}

fn json_line<W: Write, T: Serialize>(sink: &mut W, value: &T) -> Result<()> {
    serde_json::to_writer(&mut *sink, value).map_err(|e| Error::Io(e.into()))?;
    sink.write_all(b"\n")?;
    Ok(())
}

/// Runs `steps` world steps, writing a header line and then one NDJSON
/// record per colony per step.
pub fn run<W: Write>(
    world: &mut World,
    steps: u64,
    sink: &mut W,
    opts: TraceOptions,
) -> Result<()> {
    let header = Header {
        kind: "header",
        seed: world.seed,
        steps,
        width: world.width,
        height: world.height,
        speed: world.speed,
        colonies: world
            .colonies
            .iter()
            .map(|c| ColonyHeader {
                x: c.x,
                y: c.y,
                radius: c.radius,
                ants: c.ants.len(),
                sources: c.sources.len(),
                food: c.source_units(),
            })
            .collect(),
    };
    json_line(sink, &header)?;
    for _ in 0..steps {
        world.step()?;
        for (i, c) in world.colonies.iter().enumerate() {
            let rec = Record {
                step: world.step,
                colony: i,
                hoard: c.hoard,
                carrying: c.carrying(),
                pheromones: c.pheromone_count(),
                sources: c.source_units(),
                positions: opts
                    .positions
                    .then(|| c.ants.iter().map(|a| [a.x, a.y]).collect()),
            };
            json_line(sink, &rec)?;
        }
    }
    sink.flush()?;
    Ok(())
}

const PALETTE: [&str; 6] = [
    "#c0392b", "#2471a3", "#229954", "#b7950b", "#7d3c98", "#ca6f1e",
];

/// A snapshot of the world as a standalone SVG document.
pub fn render_svg(world: &World) -> String {
    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#,
        w = world.width,
        h = world.height
    );
    let _ = writeln!(s, r#"<rect width="100%" height="100%" fill="white"/>"#);
    for (i, c) in world.colonies.iter().enumerate() {
        let color = PALETTE[i % PALETTE.len()];
        for f in &c.sources {
            let _ = writeln!(
                s,
                r#"<circle cx="{:.2}" cy="{:.2}" r="{}" fill="{color}" fill-opacity="0.3"/>"#,
                f.x, f.y, f.amount
            );
        }
        for p in c.pheromones() {
            let _ = writeln!(
                s,
                r#"<circle cx="{:.2}" cy="{:.2}" r="1" fill="{color}" fill-opacity="{:.3}"/>"#,
                p.x, p.y, p.strength
            );
        }
        let _ = writeln!(
            s,
            r#"<circle cx="{:.2}" cy="{:.2}" r="{}" fill="none" stroke="{color}"/>"#,
            c.x, c.y, UNLOAD_DISTANCE
        );
        for a in &c.ants {
            let _ = writeln!(
                s,
                r#"<rect x="{:.2}" y="{:.2}" width="2" height="2" fill="{color}"/>"#,
                a.x - 1.0,
                a.y - 1.0
            );
        }
    }
    s.push_str("</svg>\n");
    s
}
