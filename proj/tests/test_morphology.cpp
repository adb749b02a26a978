#include <doctest.h>

#include <string>
#include <vector>

#include "pleo/morphology.hpp"

using namespace pleo;

namespace {

struct VerbRow {
  const char* lemma;
  const char* third;
  const char* past;
  const char* participle;
  const char* gerund;
};

// Hand-checked forms.
const std::vector<VerbRow> kVerbs = {
    {"be", "is", "was", "been", "being"},           {"have", "has", "had", "had", "having"},
    {"do", "does", "did", "done", "doing"},         {"go", "goes", "went", "gone", "going"},
    {"make", "makes", "made", "made", "making"},    {"take", "takes", "took", "taken", "taking"},
    {"see", "sees", "saw", "seen", "seeing"},       {"come", "comes", "came", "come", "coming"},
    {"know", "knows", "knew", "known", "knowing"},  {"get", "gets", "got", "gotten", "getting"},
    {"give", "gives", "gave", "given", "giving"},   {"find", "finds", "found", "found", "finding"},
    {"think", "thinks", "thought", "thought", "thinking"},
    {"tell", "tells", "told", "told", "telling"},   {"become", "becomes", "became", "become", "becoming"},
    {"leave", "leaves", "left", "left", "leaving"}, {"feel", "feels", "felt", "felt", "feeling"},
    {"bring", "brings", "brought", "brought", "bringing"},
    {"begin", "begins", "began", "begun", "beginning"},
    {"keep", "keeps", "kept", "kept", "keeping"},   {"hold", "holds", "held", "held", "holding"},
    {"write", "writes", "wrote", "written", "writing"},
    {"stand", "stands", "stood", "stood", "standing"},
    {"hear", "hears", "heard", "heard", "hearing"}, {"let", "lets", "let", "let", "letting"},
    {"mean", "means", "meant", "meant", "meaning"}, {"set", "sets", "set", "set", "setting"},
    {"meet", "meets", "met", "met", "meeting"},     {"run", "runs", "ran", "run", "running"},
    {"pay", "pays", "paid", "paid", "paying"},      {"sit", "sits", "sat", "sat", "sitting"},
    {"speak", "speaks", "spoke", "spoken", "speaking"},
    {"win", "wins", "won", "won", "winning"},        {"lead", "leads", "led", "led", "leading"},
    {"read", "reads", "read", "read", "reading"},   {"grow", "grows", "grew", "grown", "growing"},
    {"lose", "loses", "lost", "lost", "losing"},    {"fall", "falls", "fell", "fallen", "falling"},
    {"send", "sends", "sent", "sent", "sending"},   {"build", "builds", "built", "built", "building"},
    {"understand", "understands", "understood", "understood", "understanding"},
    {"draw", "draws", "drew", "drawn", "drawing"},  {"break", "breaks", "broke", "broken", "breaking"},
    {"spend", "spends", "spent", "spent", "spending"},
    {"cut", "cuts", "cut", "cut", "cutting"},       {"rise", "rises", "rose", "risen", "rising"},
    {"drive", "drives", "drove", "driven", "driving"},
    {"buy", "buys", "bought", "bought", "buying"},  {"wear", "wears", "wore", "worn", "wearing"},
    {"choose", "chooses", "chose", "chosen", "choosing"},
    {"seem", "seems", "seemed", "seemed", "seeming"},
    {"appear", "appears", "appeared", "appeared", "appearing"},
    {"happen", "happens", "happened", "happened", "happening"},
    {"remain", "remains", "remained", "remained", "remaining"},
    {"turn", "turns", "turned", "turned", "turning"},
    {"help", "helps", "helped", "helped", "helping"},
    {"pay", "pays", "paid", "paid", "paying"},      {"try", "tries", "tried", "tried", "trying"},
    {"cry", "cries", "cried", "cried", "crying"},   {"study", "studies", "studied", "studied", "studying"},
    {"carry", "carries", "carried", "carried", "carrying"},
    {"apply", "applies", "applied", "applied", "applying"},
    {"play", "plays", "played", "played", "playing"},
    {"stay", "stays", "stayed", "stayed", "staying"},
    {"enjoy", "enjoys", "enjoyed", "enjoyed", "enjoying"},
    {"stop", "stops", "stopped", "stopped", "stopping"},
    {"plan", "plans", "planned", "planned", "planning"},
    {"admit", "admits", "admitted", "admitted", "admitting"},
    {"prefer", "prefers", "preferred", "preferred", "preferring"},
    {"occur", "occurs", "occurred", "occurred", "occurring"},
    {"program", "programs", "programmed", "programmed", "programming"},
    {"open", "opens", "opened", "opened", "opening"},
    {"visit", "visits", "visited", "visited", "visiting"},
    {"offer", "offers", "offered", "offered", "offering"},
    {"pass", "passes", "passed", "passed", "passing"},
    {"push", "pushes", "pushed", "pushed", "pushing"},
    {"watch", "watches", "watched", "watched", "watching"},
    {"fix", "fixes", "fixed", "fixed", "fixing"},   {"buzz", "buzzes", "buzzed", "buzzed", "buzzing"},
    {"rain", "rains", "rained", "rained", "raining"},
    {"snow", "snows", "snowed", "snowed", "snowing"},
    {"hail", "hails", "hailed", "hailed", "hailing"},
    {"like", "likes", "liked", "liked", "liking"},  {"use", "uses", "used", "used", "using"},
    {"agree", "agrees", "agreed", "agreed", "agreeing"},
    {"free", "frees", "freed", "freed", "freeing"}, {"die", "dies", "died", "died", "dying"},
    {"tie", "ties", "tied", "tied", "tying"},       {"create", "creates", "created", "created", "creating"},
    {"decide", "decides", "decided", "decided", "deciding"},
    {"change", "changes", "changed", "changed", "changing"},
    {"believe", "believes", "believed", "believed", "believing"},
    {"matter", "matters", "mattered", "mattered", "mattering"},
    {"follow", "follows", "followed", "followed", "following"},
    {"show", "shows", "showed", "shown", "showing"},
    {"ask", "asks", "asked", "asked", "asking"},    {"work", "works", "worked", "worked", "working"},
    {"call", "calls", "called", "called", "calling"},
    {"need", "needs", "needed", "needed", "needing"},
    {"want", "wants", "wanted", "wanted", "wanting"},
    {"look", "looks", "looked", "looked", "looking"},
    {"seek", "seeks", "sought", "sought", "seeking"},
    {"teach", "teaches", "taught", "taught", "teaching"},
    {"catch", "catches", "caught", "caught", "catching"},
    {"fly", "flies", "flew", "flown", "flying"},    {"sell", "sells", "sold", "sold", "selling"},
    {"say", "says", "said", "said", "saying"},      {"put", "puts", "put", "put", "putting"},
};

}  // namespace

TEST_CASE("hand-checked verb forms") {
  const auto& m = Morphology::builtin();
  CHECK(kVerbs.size() >= 100);
  for (const auto& v : kVerbs) {
    CAPTURE(v.lemma);
    if (std::string(v.lemma) != "be") {
      CHECK(m.third_singular(v.lemma) == v.third);
      CHECK(m.past(v.lemma) == v.past);
    }
    CHECK(m.past_participle(v.lemma) == v.participle);
    CHECK(m.gerund(v.lemma) == v.gerund);
    // and back again
    CHECK(m.verb_lemma(v.third, "VBZ") == v.lemma);
    CHECK(m.verb_lemma(v.gerund, "VBG") == v.lemma);
    if (std::string(v.lemma) != "be") CHECK(m.verb_lemma(v.past, "VBD") == v.lemma);
    CHECK(m.verb_lemma(v.lemma, "VB") == v.lemma);
  }
}

TEST_CASE("be and have forms") {
  for (const char* w : {"is", "was", "were", "are", "am", "be", "been", "being", "'s", "'re", "'m"})
    CHECK(is_be_form(w));
  CHECK_FALSE(is_be_form("has"));
  for (const char* w : {"have", "has", "had", "having", "'ve"}) CHECK(is_have_form(w));
  const auto& m = Morphology::builtin();
  CHECK(m.verb_lemma("'s", "VBZ") == "be");
  CHECK(m.verb_lemma("Was", "VBD") == "be");
}

TEST_CASE("adjective and noun bases") {
  const auto& m = Morphology::builtin();
  CHECK(m.adjective_base("easier", "JJR") == "easy");
  CHECK(m.adjective_base("best", "JJS") == "good");
  CHECK(m.adjective_base("worse", "JJR") == "bad");
  CHECK(m.adjective_base("larger", "JJR") == "large");
  CHECK(m.adjective_base("bigger", "JJR") == "big");
  CHECK(m.adjective_base("difficult", "JJ") == "difficult");
  CHECK(m.noun_lemma("companies", "NNS") == "company");
  CHECK(m.noun_lemma("children", "NNS") == "child");
  CHECK(m.noun_lemma("boxes", "NNS") == "box");
  CHECK(m.noun_lemma("factors", "NNS") == "factor");
  CHECK(m.noun_lemma("news", "NN") == "news");
}

TEST_CASE("custom irregular and doubling tables") {
  auto m = Morphology::parse("glorp glarp glorpen\n", "zing\n");
  CHECK(m.past("glorp") == "glarp");
  CHECK(m.past_participle("glorp") == "glorpen");
  CHECK(m.verb_lemma("glarp", "VBD") == "glorp");
  CHECK(m.third_singular("glorp") == "glorps");
}
