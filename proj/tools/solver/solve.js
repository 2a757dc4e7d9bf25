#!/usr/bin/env node
// Reads an SMT-LIB2 script (one `maximize` allowed) from the file given as
// the first argument and prints the solver response to stdout.
const { init } = require('z3-solver');
const fs = require('fs');

(async () => {
  const file = process.argv[2];
  if (!file) {
    console.error('usage: solve.js SCRIPT.smt2');
    process.exit(2);
  }
  const script = fs.readFileSync(file, 'utf8');
  const { Z3, em } = await init();
  const cfg = Z3.mk_config();
  const ctx = Z3.mk_context(cfg);
  const out = await Z3.eval_smtlib2_string(ctx, script);
  console.log(out);
  em.PThread.terminateAllThreads();
  process.exit(0);
})().catch((e) => {
  console.error(String(e && e.message ? e.message : e));
  process.exit(1);
});
