//! Wall-clock staging and the stderr run report.

use std::io::IsTerminal;
use std::time::{Duration, Instant};

use cliph_core::{RunObserver, RunReport};

/// Measures the gap between consecutive stage callbacks.
pub struct TimingObserver {
    started: Instant,
    last: Instant,
    pub stages: Vec<(String, Duration)>,
}

impl TimingObserver {
    pub fn new() -> Self {
        let now = Instant::now();
        TimingObserver { started: now, last: now, stages: Vec::new() }
    }

    pub fn total(&self) -> Duration {
        self.started.elapsed()
    }
}

impl Default for TimingObserver {
    fn default() -> Self {
        Self::new()
    }
}

impl RunObserver for TimingObserver {
    fn stage(&mut self, name: &str) {
        let now = Instant::now();
        self.stages.push((name.to_string(), now - self.last));
        self.last = now;
    }
}

/// ANSI styling only on an interactive stderr with NO_COLOR unset.
pub fn use_color() -> bool {
    std::env::var_os("NO_COLOR").is_none() && std::io::stderr().is_terminal()
}

fn label(text: &str, color: bool) -> String {
    if color {
        format!("\x1b[1m{text}\x1b[0m")
    } else {
        text.to_string()
    }
}

fn millis(d: Duration) -> String {
    format!("{:.1}ms", d.as_secs_f64() * 1000.0)
}

pub fn print_report(report: &RunReport, timer: &TimingObserver) {
    let color = use_color();
    eprintln!(
        "{} {} vertices, {} edges",
        label("input:", color),
        report.input_vertices,
        report.input_edges
    );
    if report.active_vertices != report.input_vertices || report.weighted_pairs > 0 {
        eprintln!(
            "{} {} vertices, {} weighted pairs",
            label("active:", color),
            report.active_vertices,
            report.weighted_pairs
        );
    }
    let counts: Vec<String> =
        report.simplex_counts.iter().map(|c| c.to_string()).collect();
    eprintln!("{} {}", label("simplices:", color), counts.join(" + "));
    if report.dropped_zero.iter().any(|&d| d > 0) {
        let dropped: Vec<String> =
            report.dropped_zero.iter().map(|c| c.to_string()).collect();
        eprintln!(
            "{} {}",
            label("dropped zero-persistence:", color),
            dropped.join(" + ")
        );
    }
    let stages: Vec<String> = timer
        .stages
        .iter()
        .map(|(name, d)| format!("{name} {}", millis(*d)))
        .collect();
    if !stages.is_empty() {
        eprintln!("{} {}", label("stages:", color), stages.join(", "));
    }
    eprintln!("{} {}", label("total:", color), millis(timer.total()));
}
