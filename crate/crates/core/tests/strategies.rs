use pluract::derive::derive_pluractional_form;
use pluract::io::fixtures::{karuk_lexicon, stick_lexicon, tsix_lexicon, yurok_lexicon};
use pluract::profile::{instrumented_run, run, Process, ProcessInput};
use pluract::validate::validate_word_form;

fn process_for(kind: pluract::derive::StrategyKind) -> Process {
    use pluract::derive::StrategyKind::*;
    match kind {
        Affix => Process::Affix,
        TotalRedup => Process::TotalRedup,
        PartialRedup => Process::PartialRedup,
    }
}

#[test]
fn every_shipped_strategy_derives_a_valid_form() {
    let mut derived = 0;
    for doc in [
        stick_lexicon(),
        tsix_lexicon(),
        karuk_lexicon(),
        yurok_lexicon(),
    ] {
        for (name, binding) in &doc.strategies {
            let strategy = doc.resolve_strategy(binding).unwrap();
            let w = &doc.word_forms[&binding.verb];
            let w2 = derive_pluractional_form(w, &strategy, &binding.pins).unwrap();
            let report = validate_word_form(&w2);
            assert!(report.is_valid(), "{}:{name}\n{report}", binding.verb);
            assert!(w2.phon.vertices.len() > w.phon.vertices.len());
            assert_eq!(w2.phon.roots().len(), 1);

            let input = ProcessInput::Form {
                word: w.clone(),
                strategy,
                pins: binding.pins.clone(),
            };
            let p = process_for(binding.kind);
            let (slow, counter) = instrumented_run(p, &input).unwrap();
            assert_eq!(slow, run(p, &input).unwrap(), "{}:{name}", binding.verb);
            assert!(counter.total() > 0);
            derived += 1;
        }
    }
    assert_eq!(derived, 5);
}

#[test]
fn yurok_infix_follows_its_anchor() {
    let doc = yurok_lexicon();
    let binding = doc.strategy("ep").unwrap();
    let pluract::derive::AffixPosition::Infix { anchor } = binding.position else {
        panic!("yurok ep is an infix");
    };
    let strategy = doc.resolve_strategy(binding).unwrap();
    let w2 =
        derive_pluractional_form(&doc.word_forms[&binding.verb], &strategy, &binding.pins).unwrap();
    let after: Vec<_> = w2
        .phon
        .precedence
        .iter()
        .filter(|(a, _)| a.index() == anchor.index())
        .collect();
    assert!(!after.is_empty());
}
