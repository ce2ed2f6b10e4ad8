//! Extract a cop strategy, certify it, save it as JSON and replay scripted plays.

use eternal_pursuit::engine::{
    extract_strategy, run_policy, Budget, CopConfig, PlayOutcome, PlayScript, ScriptedRobber, Session, StrategyTable,
};
use eternal_pursuit::graph::generate;

fn main() -> eternal_pursuit::Result<()> {
    let g = generate("path:6")?;
    let (k, t) = (2, 2);
    let table = extract_strategy(&g, k, t, Budget::from_env())?;
    table.certify(&g)?;
    println!("{k} cops on path:6 with t = {t}: {} states, {} winning starts", table.moves.len(), table.winning.len());

    let json = table.to_json()?;
    let back = StrategyTable::from_json(&json)?;
    assert_eq!(back, table);
    println!("json round trip ok ({} bytes)", json.len());

    // the robber tries both ends, then runs from the middle
    let scripts = [
        PlayScript { placement: 0, moves: vec![] },
        PlayScript { placement: 5, moves: vec![] },
        PlayScript { placement: 3, moves: vec![4, 5] },
    ];
    let mut session = Session::with_start(&table, &g, CopConfig::new(vec![1, 4]))?;
    run_policy(&mut session, &mut ScriptedRobber::new(scripts.to_vec()), scripts.len())?;
    let transcript = session.into_transcript();
    for e in &transcript.events {
        println!("  {e}");
    }
    for (j, o) in transcript.outcomes.iter().enumerate() {
        match o {
            PlayOutcome::Captured { steps, config } => println!("play {}: captured after {steps}, cops at {config}", j + 1),
            PlayOutcome::Escaped => println!("play {}: escaped", j + 1),
        }
    }
    Ok(())
}
