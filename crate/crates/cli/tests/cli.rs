use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn rehard(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rehard")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn size_of_universe() {
    let out = rehard(&["size", "(0|1)*"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "4\n");
    assert_eq!(stdout(&rehard(&["size", "0{8}"])), "8\n");
    assert_eq!(stdout(&rehard(&["size", "0{8}", "--counting"])), "4\n");
}

#[test]
fn worked_dnf_file() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("phi.dnf");
    fs::write(&file, "dnf 4 2\n+1 -3 +4\n-2 +3\n").unwrap();
    let out = rehard(&["compile-dnf", path(&file)]);
    assert_eq!(stdout(&out), "(1(0|1)01)|((0|1)01(0|1))\n");
}

#[test]
fn formula_targets() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("phi.sexp");
    fs::write(&file, "(var 2)\n").unwrap();
    let out = rehard(&["compile-formula", path(&file), "--target", "inter", "--vars", "3"]);
    assert_eq!(stdout(&out), "(0|1)1(0|1)\n");
    fs::write(&file, "(and (var 1) (var 2))").unwrap();
    let out = rehard(&["compile-formula", path(&file), "--target", "neg"]);
    assert!(out.status.success());
    assert!(!stdout(&out).contains('&'));
}

#[test]
fn match_exit_codes() {
    let hit = rehard(&["match", "(0|1)*1", "0101"]);
    assert_eq!((hit.status.code(), stdout(&hit).as_str()), (Some(0), "true\n"));
    let miss = rehard(&["match", "(0|1)*1", "0110"]);
    assert_eq!((miss.status.code(), stdout(&miss).as_str()), (Some(1), "false\n"));
    let bad = rehard(&["match", "(0|1", "01"]);
    assert_eq!(bad.status.code(), Some(2));
    assert_eq!(stderr(&bad).lines().count(), 1);
    assert!(stderr(&bad).contains("(0|1"));
}

#[test]
fn equivalence_verdicts() {
    let out = rehard(&["equiv", "0|1", "1|0", "--maxlen", "4"]);
    assert_eq!((out.status.code(), stdout(&out).as_str()), (Some(0), "equivalent\n"));
    let out = rehard(&["equiv", "0*", "(00)*", "--maxlen", "4"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("counterexample: 0\n"));
}

#[test]
fn automata_pipeline() {
    let dir = tempfile::tempdir().unwrap();
    let nfa = dir.path().join("a.nfa");
    let out = rehard(&["re2nfa", "(0|1)*1(0|1)"]);
    fs::write(&nfa, stdout(&out)).unwrap();
    let dfa = dir.path().join("a.dfa");
    fs::write(&dfa, stdout(&rehard(&["nfa2dfa", path(&nfa)]))).unwrap();
    let min = stdout(&rehard(&["min", path(&dfa)]));
    assert!(min.starts_with("dfa 4\n"), "{min}");
    assert_eq!(min, stdout(&rehard(&["re2dfa", "(0|1)*1(0|1)"])));
    let re = stdout(&rehard(&["dfa2re", path(&dfa)]));
    let eq = rehard(&["equiv", re.trim(), "(0|1)*1(0|1)", "--maxlen", "8"]);
    assert!(eq.status.success(), "{re}");

    let comp = dir.path().join("c.dfa");
    fs::write(&comp, stdout(&rehard(&["complement", path(&dfa)]))).unwrap();
    let both = dir.path().join("p.dfa");
    fs::write(&both, stdout(&rehard(&["product", path(&dfa), path(&comp), "--op", "and"]))).unwrap();
    let empty = stdout(&rehard(&["dfa2re", path(&both)]));
    assert_eq!(empty, "@\n");

    fs::write(&nfa, "nfa 2\ninit 0\nfinal 1\nt 0 2 1\n").unwrap();
    let bad = rehard(&["nfa2dfa", path(&nfa)]);
    assert_eq!(bad.status.code(), Some(2));
    assert!(stderr(&bad).contains("line 4"), "{}", stderr(&bad));
}

#[test]
fn randomized_commands_require_a_seed() {
    for args in [
        vec!["gen-hypergraph", "--n", "8", "--m", "4", "--k", "2"],
        vec!["gen-challenge", "--m", "4", "--mode", "random"],
        vec!["distinguish", "--learner", "const0"],
    ] {
        let out = rehard(&args);
        assert_eq!(out.status.code(), Some(2));
        assert!(stderr(&out).contains("--seed"));
    }
    assert_eq!(rehard(&["size", "0", "--bogus"]).status.code(), Some(2));
}

#[test]
fn gadget_artifacts_are_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("g.cfg");
    fs::write(&cfg, "gadget n=8 k=2 N=12 gamma=1/5 variant=counting pred=0110 seed=4\n").unwrap();
    let c = path(&cfg);
    let run = |tag: &str| {
        let hg = dir.path().join(format!("{tag}.hg"));
        let ch = dir.path().join(format!("{tag}.ch"));
        let ex = dir.path().join(format!("{tag}.ex"));
        let gd = dir.path().join(format!("{tag}.gadget"));
        let rep = dir.path().join(format!("{tag}.rep"));
        assert!(rehard(&["gen-hypergraph", "--n", "8", "--m", "5", "--k", "2", "--seed", "1", "-o", path(&hg)]).status.success());
        assert!(rehard(&["gen-challenge", "--config", c, "--m", "40", "--mode", "pseudorandom", "--seed", "2", "-o", path(&ch)]).status.success());
        assert!(rehard(&["gen-examples", "--config", c, "--challenge", path(&ch), "--count", "30", "--seed", "3", "-o", path(&ex)]).status.success());
        assert!(rehard(&["gen-gadget", "--config", c, "-o", path(&gd)]).status.success());
        let out = rehard(&["distinguish", "--config", c, "--learner", "oracle", "--trials", "5", "--p-train", "5", "--v-size", "20", "--seed", "9", "-o", path(&rep)]);
        assert!(out.status.success(), "{}", stderr(&out));
        [hg, ch, ex, gd, rep].map(|p| fs::read_to_string(p).unwrap())
    };
    let first = run("a");
    assert_eq!(first, run("b"));
    let [hg, ch, ex, gd, rep] = first;
    assert!(hg.starts_with("hg 8 5 2\n"));
    assert!(ch.starts_with("challenge 8 2 40 pseudorandom\nseed "));
    assert!(ex.starts_with("examples 12 30\n"));
    assert!(gd.starts_with("gadget n=8 k=2 N=12 gamma=0.2 variant=counting pred=0110 seed=4\n"));
    let size: Vec<&str> = gd.lines().filter(|l| l.starts_with("size ") || l.starts_with("closed_form ")).map(|l| l.split(' ').nth(1).unwrap()).collect();
    assert_eq!(size[0], size[1]);
    assert!(rep.contains("ones_pseudo=5\n") && rep.contains("seed=9\n"));
}
