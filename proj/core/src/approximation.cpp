#include "dyck/approximation.hpp"

#include "dyck/errors.hpp"

namespace dyck {

namespace {

void append_repeated(Word& w, Letter l, std::int64_t times) {
  for (std::int64_t i = 0; i < times; ++i) w.push_back(l);
}

Word couple_word(int pair) {
  Word w;
  w.push_back(closer_of_pair(pair));
  w.push_back(opener_of_pair(pair));
  return w;
}

}  // namespace

GadgetSet build_gadgets(const FiniteQuotient& q) {
  GadgetSet set;
  set.per_pair.reserve(q.alphabet().pair_count());
  for (int pair = 0; pair < q.alphabet().pair_count(); ++pair) {
    const Letter opener = opener_of_pair(pair);
    const Letter closer = closer_of_pair(pair);
    const std::int64_t n = pair_exponent(q, pair);
    // letter^(n-1) is the inverse image, so base is the inverse of the
    // closing-order couple's image
    const Permutation base =
        q.image(opener).power(n - 1).then(q.image(closer).power(n - 1));
    const std::int64_t m = permutation_order(base);

    PairGadget g;
    g.exponent = n;
    g.base_order = m;
    g.gadget.reserve(static_cast<std::size_t>(2 * (n - 1) * (m - 1)));
    for (std::int64_t rep = 0; rep < m - 1; ++rep) {
      append_repeated(g.gadget, opener, n - 1);
      append_repeated(g.gadget, closer, n - 1);
    }
    g.head = g.gadget;
    append_repeated(g.head, opener, n - 1);
    append_repeated(g.tail, closer, n - 1);
    g.tail.append(g.gadget);

    if (g.gadget.size() != static_cast<std::size_t>(2 * (n - 1) * (m - 1)))
      throw InternalError("gadget length mismatch");
    if (!is_one_sided_quick(g.gadget))
      throw InternalError("gadget is not one-sided");
    if (q.evaluate(g.gadget) != q.evaluate(couple_word(pair)))
      throw InternalError("gadget does not evaluate to the closing couple");
    if (q.evaluate(g.head) != q.image(closer))
      throw InternalError("gadget head does not evaluate to the closer image");
    if (q.evaluate(g.tail) != q.image(opener))
      throw InternalError("gadget tail does not evaluate to the opener image");
    if (!is_one_sided_quick(concat(g.head, g.tail)))
      throw InternalError("gadget head+tail is not one-sided");

    set.per_pair.push_back(std::move(g));
  }
  return set;
}

namespace {

struct ForestEmitter {
  const Word& input;
  const std::vector<std::size_t>& partner;
  const GadgetSet& gadgets;
  Word out;

  // emits the one-sided replacement of input[lo, hi)
  void emit(std::size_t lo, std::size_t hi) {
    std::size_t i = lo;
    while (i < hi) {
      const std::size_t j = partner[i];  // i is the left end of its pair
      const Letter left = input[i];
      if (is_opener(left)) {
        out.push_back(left);
        emit(i + 1, j);
        out.push_back(input[j]);
      } else {
        const PairGadget& g = gadgets.per_pair[pair_of(left)];
        if (j == i + 1) {
          out.append(g.gadget);
        } else {
          out.append(g.head);
          emit(i + 1, j);
          out.append(g.tail);
        }
      }
      i = j + 1;
    }
  }
};

}  // namespace

Word approximate(const FiniteQuotient& q, const Word& w, const GadgetSet& gadgets) {
  auto two_sided = is_two_sided(w);
  if (!two_sided.accepted)
    throw NotTwoSidedError(
        "approximation needs a two-sided member",
        format_word(two_sided.residual, q.alphabet(), DisplayMode::letters));

  std::vector<std::size_t> partner(w.size());
  for (const auto& p : two_sided.certificate.pairs) {
    partner[p.left] = p.right;
    partner[p.right] = p.left;
  }
  ForestEmitter emitter{w, partner, gadgets, {}};
  emitter.emit(0, w.size());

  if (!is_one_sided_quick(emitter.out))
    throw InternalError("approximation output is not one-sided");
  if (q.evaluate(emitter.out) != q.evaluate(w))
    throw InternalError("approximation output evaluates differently");
  return std::move(emitter.out);
}

Word approximate(const FiniteQuotient& q, const Word& w) {
  return approximate(q, w, build_gadgets(q));
}

ApproximationReport verify_approximation(const FiniteQuotient& q, const Word& w,
                                         const Word& witness) {
  ApproximationReport report;
  report.input_two_sided = is_two_sided_quick(w);
  report.witness_one_sided = is_one_sided_quick(witness);
  report.evaluations_match = q.evaluate(w) == q.evaluate(witness);
  return report;
}

}  // namespace dyck
