//! A robber who lets himself be caught deep in a leg drags the cops away
//! from the centre. Against a strategy that only plans one play at a time
//! he eventually survives longer than t; the eternal strategy holds.

use eternal_pursuit::engine::{
    extract_single_play_strategy, extract_strategy, run_policy, Budget, PlayOutcome, Session, SpiderSacrifice,
};
use eternal_pursuit::graph::generate;

fn main() -> eternal_pursuit::Result<()> {
    let (legs, leg_len, t, cops) = (3, 4, 4, 2);
    let g = generate(&format!("spider:{legs}x{leg_len}"))?;
    let budget = Budget::from_env();

    let naive = extract_single_play_strategy(&g, cops, t, budget)?;
    let mut robber = SpiderSacrifice::new(legs, leg_len, t, cops);
    println!("planned depths: {:?}", (1..=cops + 1).map(|j| robber.depth_for_play(j)).collect::<Vec<_>>());
    let mut session = Session::new(&naive, &g)?;
    run_policy(&mut session, &mut robber, cops + 1)?;
    report("single-play strategy", &session.into_transcript().outcomes);

    match extract_strategy(&g, cops, t, budget) {
        Ok(table) => {
            let mut session = Session::new(&table, &g)?;
            run_policy(&mut session, &mut SpiderSacrifice::new(legs, leg_len, t, cops), 10)?;
            report("eternal strategy", &session.into_transcript().outcomes);
        }
        Err(e) => println!("eternal strategy with {cops} cops: {e}"),
    }
    Ok(())
}

fn report(name: &str, outcomes: &[PlayOutcome]) {
    println!("{name}:");
    for (j, o) in outcomes.iter().enumerate() {
        match o {
            PlayOutcome::Captured { steps, config } => println!("  play {}: caught after {steps} step(s), cops now {config}", j + 1),
            PlayOutcome::Escaped => println!("  play {}: robber survives", j + 1),
        }
    }
}
