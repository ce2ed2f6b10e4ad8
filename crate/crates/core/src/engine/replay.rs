//! Driving a strategy table against a robber, one play after another.

use std::fmt;

use super::config::CopConfig;
use super::strategy::{StrategyTable, TableKind};
use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Event {
    PlayStarted { play: usize, config: CopConfig },
    Placed { robber: usize },
    CopsMoved { from: CopConfig, to: CopConfig, steps_left: usize },
    RobberMoved { from: usize, to: usize },
    Captured { at: usize, steps: usize, config: CopConfig },
    Escaped { robber: usize, config: CopConfig },
}

impl fmt::Display for Event {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Event::PlayStarted { play, config } => write!(f, "play {play}: cops at {config}"),
            Event::Placed { robber } => write!(f, "robber appears on {robber}"),
            Event::CopsMoved { from, to, steps_left } => {
                write!(f, "cops {from} -> {to}, {steps_left} step(s) left")
            }
            Event::RobberMoved { from, to } if from == to => write!(f, "robber stays on {to}"),
            Event::RobberMoved { from, to } => write!(f, "robber {from} -> {to}"),
            Event::Captured { at, steps, config } => {
                write!(f, "captured on {at} after {steps} step(s); cops at {config}")
            }
            Event::Escaped { robber, config } => write!(f, "robber on {robber} survives; cops at {config}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PlayOutcome {
    Captured { steps: usize, config: CopConfig },
    Escaped,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Transcript {
    pub events: Vec<Event>,
    pub outcomes: Vec<PlayOutcome>,
}

impl Transcript {
    pub fn all_captured_within(&self, t: usize) -> bool {
        self.outcomes
            .iter()
            .all(|o| matches!(o, PlayOutcome::Captured { steps, .. } if *steps <= t))
    }

    pub fn any_escape(&self) -> bool {
        self.outcomes.contains(&PlayOutcome::Escaped)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Phase {
    AwaitPlacement,
    AwaitRobberMove,
    Over,
}

/// Interactive replay of a table. Illegal robber input is rejected with an
/// error and leaves the session untouched.
pub struct Session<'a> {
    table: &'a StrategyTable,
    graph: &'a Graph,
    config: CopConfig,
    robber: usize,
    steps_left: usize,
    play: usize,
    phase: Phase,
    transcript: Transcript,
}

impl<'a> Session<'a> {
    /// Starts from the lexicographically least winning configuration.
    pub fn new(table: &'a StrategyTable, graph: &'a Graph) -> Result<Self> {
        let start = table
            .winning
            .first()
            .cloned()
            .ok_or(Error::EmptyWinSet { k: table.k, t: table.t })?;
        Self::with_start(table, graph, start)
    }

    pub fn with_start(table: &'a StrategyTable, graph: &'a Graph, start: CopConfig) -> Result<Self> {
        table.check_graph(graph)?;
        let mut s = Session {
            table,
            graph,
            config: start,
            robber: 0,
            steps_left: 0,
            play: 0,
            phase: Phase::AwaitPlacement,
            transcript: Transcript::default(),
        };
        s.begin_play();
        Ok(s)
    }

    fn begin_play(&mut self) {
        self.play += 1;
        self.phase = Phase::AwaitPlacement;
        self.transcript
            .events
            .push(Event::PlayStarted { play: self.play, config: self.config.clone() });
    }

    pub fn config(&self) -> &CopConfig {
        &self.config
    }

    pub fn robber(&self) -> Option<usize> {
        (self.phase == Phase::AwaitRobberMove).then_some(self.robber)
    }

    pub fn steps_left(&self) -> usize {
        self.steps_left
    }

    pub fn play(&self) -> usize {
        self.play
    }

    pub fn is_over(&self) -> bool {
        self.phase == Phase::Over
    }

    pub fn awaiting_placement(&self) -> bool {
        self.phase == Phase::AwaitPlacement
    }

    pub fn transcript(&self) -> &Transcript {
        &self.transcript
    }

    pub fn into_transcript(self) -> Transcript {
        self.transcript
    }

    /// False when the cops occupy every vertex; such a play is won vacuously.
    pub fn robber_can_place(&self) -> bool {
        (0..self.graph.n()).any(|v| !self.config.occupies(v))
    }

    /// Places the robber and plays the cops' first turn.
    pub fn place(&mut self, robber: usize) -> Result<Vec<Event>> {
        if self.phase != Phase::AwaitPlacement {
            return Err(Error::InvalidParameter("a play is already in progress".into()));
        }
        if robber >= self.graph.n() {
            return Err(Error::VertexOutOfRange { vertex: robber, n: self.graph.n() });
        }
        if self.config.occupies(robber) {
            return Err(Error::RobberOnCop(robber));
        }
        let mark = self.transcript.events.len();
        self.robber = robber;
        self.steps_left = self.table.t;
        self.phase = Phase::AwaitRobberMove;
        self.transcript.events.push(Event::Placed { robber });
        self.cop_turn()?;
        Ok(self.transcript.events[mark..].to_vec())
    }

    /// Moves the robber (staying is a move to the same vertex), then the cops answer.
    pub fn robber_move(&mut self, to: usize) -> Result<Vec<Event>> {
        if self.phase != Phase::AwaitRobberMove {
            return Err(Error::InvalidParameter("no robber on the board".into()));
        }
        if to >= self.graph.n() || !self.graph.closed_neighbors(self.robber).contains(&to) {
            return Err(Error::IllegalMove { from: self.robber, to });
        }
        let mark = self.transcript.events.len();
        let from = self.robber;
        self.robber = to;
        self.transcript.events.push(Event::RobberMoved { from, to });
        if self.config.occupies(to) {
            self.finish_capture(to);
        } else if self.steps_left == 0 {
            self.transcript
                .events
                .push(Event::Escaped { robber: to, config: self.config.clone() });
            self.transcript.outcomes.push(PlayOutcome::Escaped);
            self.phase = Phase::Over;
        } else {
            self.cop_turn()?;
        }
        Ok(self.transcript.events[mark..].to_vec())
    }

    fn cop_turn(&mut self) -> Result<()> {
        let s = self.steps_left;
        let next = match self.table.lookup(&self.config, self.robber, s) {
            Some(d) => d.clone(),
            None if self.table.kind == TableKind::SinglePlay => self.chase(),
            None => {
                return Err(Error::MissingState {
                    config: self.config.positions().to_vec(),
                    robber: self.robber,
                    steps_left: s,
                })
            }
        };
        let from = std::mem::replace(&mut self.config, next.clone());
        self.steps_left -= 1;
        self.transcript
            .events
            .push(Event::CopsMoved { from, to: next, steps_left: self.steps_left });
        if self.config.occupies(self.robber) {
            self.finish_capture(self.robber);
        }
        Ok(())
    }

    /// Fallback for single-play tables: every cop steps along a shortest path.
    fn chase(&self) -> CopConfig {
        let g = self.graph;
        let r = self.robber;
        let moved = self
            .config
            .positions()
            .iter()
            .map(|&c| *g.closed_neighbors(c).iter().min_by_key(|&&w| (g.dist(w, r), w)).unwrap())
            .collect();
        CopConfig::new(moved)
    }

    fn finish_capture(&mut self, at: usize) {
        let steps = self.table.t - self.steps_left;
        self.transcript
            .events
            .push(Event::Captured { at, steps, config: self.config.clone() });
        self.transcript
            .outcomes
            .push(PlayOutcome::Captured { steps, config: self.config.clone() });
        self.begin_play();
    }
}

/// A robber controller for automated sessions.
pub trait RobberPolicy {
    /// Placement for the next play, or `None` to stop.
    fn place(&mut self, g: &Graph, cops: &CopConfig, play: usize) -> Option<usize>;
    /// Move after the cops' `step`-th turn of the current play.
    fn step(&mut self, g: &Graph, cops: &CopConfig, robber: usize, step: usize) -> usize;
}

/// Runs up to `max_plays` plays, stopping early at the first escape.
pub fn run_policy(session: &mut Session<'_>, policy: &mut dyn RobberPolicy, max_plays: usize) -> Result<()> {
    let mut completed = 0;
    while completed < max_plays && !session.is_over() {
        if !session.robber_can_place() {
            break;
        }
        let Some(r) = policy.place(session.graph, session.config(), session.play()) else { break };
        session.place(r)?;
        while let Some(robber) = session.robber() {
            let step = session.table.t - session.steps_left();
            let to = policy.step(session.graph, session.config(), robber, step);
            session.robber_move(to)?;
        }
        completed += 1;
    }
    Ok(())
}

/// One scripted play: a placement and the robber's moves, one per time-step.
/// When the moves run out the robber stays put.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlayScript {
    pub placement: usize,
    pub moves: Vec<usize>,
}

pub struct ScriptedRobber {
    plays: Vec<PlayScript>,
    current: usize,
}

impl ScriptedRobber {
    pub fn new(plays: Vec<PlayScript>) -> Self {
        ScriptedRobber { plays, current: 0 }
    }
}

impl RobberPolicy for ScriptedRobber {
    fn place(&mut self, _g: &Graph, _cops: &CopConfig, play: usize) -> Option<usize> {
        self.current = play - 1;
        self.plays.get(self.current).map(|p| p.placement)
    }

    fn step(&mut self, _g: &Graph, _cops: &CopConfig, robber: usize, step: usize) -> usize {
        self.plays[self.current].moves.get(step - 1).copied().unwrap_or(robber)
    }
}

/// Replays `scripts` against `table` from its first winning configuration.
pub fn replay(table: &StrategyTable, graph: &Graph, scripts: &[PlayScript]) -> Result<Transcript> {
    let mut session = Session::new(table, graph)?;
    let mut robber = ScriptedRobber::new(scripts.to_vec());
    run_policy(&mut session, &mut robber, scripts.len())?;
    Ok(session.into_transcript())
}

/// The sacrificial robber on a spider with equal legs (`spider:bxl` numbering).
///
/// For plays `j = 1..=i` the robber appears at depth
/// `r_j = (2^(i-j+1) - 1)(t - l) + (2^(i-j+1) - 1)` on a leg free of cops and
/// waits; if not caught within `t - (l - r_j)` steps he runs to the leaf.
/// On play `i + 1` he sits on the leaf of a cop-free leg. Against `i` cops,
/// when `l >= (1 - 2^-i) t + 1 - 2^-i` and there are more than `i` legs, some
/// play lasts longer than `t`.
pub struct SpiderSacrifice {
    pub legs: usize,
    pub leg_len: usize,
    pub t: usize,
    pub i: usize,
    depth: usize,
    leg: usize,
    run_after: usize,
}

impl SpiderSacrifice {
    pub fn new(legs: usize, leg_len: usize, t: usize, i: usize) -> Self {
        SpiderSacrifice { legs, leg_len, t, i, depth: 0, leg: 0, run_after: usize::MAX }
    }

    /// `r_j` for play `j` (1-based), clamped to `0..=leg_len`.
    pub fn depth_for_play(&self, j: usize) -> usize {
        if j > self.i {
            return self.leg_len;
        }
        let f = (1i64 << (self.i - j + 1)) - 1;
        let r = f * (self.t as i64 - self.leg_len as i64) + f;
        r.clamp(0, self.leg_len as i64) as usize
    }

    fn vertex(&self, leg: usize, depth: usize) -> usize {
        if depth == 0 {
            0
        } else {
            1 + leg * self.leg_len + depth - 1
        }
    }

    fn leg_of(&self, v: usize) -> Option<usize> {
        (v != 0).then(|| (v - 1) / self.leg_len)
    }
}

impl RobberPolicy for SpiderSacrifice {
    fn place(&mut self, _g: &Graph, cops: &CopConfig, play: usize) -> Option<usize> {
        let occupied: Vec<usize> = cops.positions().iter().filter_map(|&c| self.leg_of(c)).collect();
        let leg = (0..self.legs).find(|l| !occupied.contains(l))?;
        self.leg = leg;
        self.depth = self.depth_for_play(play);
        self.run_after = if play <= self.i {
            self.t.saturating_sub(self.leg_len - self.depth)
        } else {
            usize::MAX
        };
        let v = self.vertex(leg, self.depth);
        (!cops.occupies(v)).then_some(v)
    }

    fn step(&mut self, _g: &Graph, cops: &CopConfig, robber: usize, step: usize) -> usize {
        if step > self.run_after && self.depth < self.leg_len {
            let next = self.vertex(self.leg, self.depth + 1);
            if !cops.occupies(next) {
                self.depth += 1;
                return next;
            }
        }
        robber
    }
}
