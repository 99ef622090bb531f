#include <cctype>
#include <map>
#include <string>
#include <vector>

#include "tanglekit/diagram.hpp"

namespace tanglekit {

namespace {

struct Token {
  enum class Kind { Ident, Number, LBrace, RBrace, LParen, RParen, Comma, Equals, End };
  Kind kind;
  std::string text;
  long value = 0;
  int line, col;
};

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) {}

  Token next() {
    skip_ws();
    Token t;
    t.line = line_;
    t.col = col_;
    if (pos_ >= text_.size()) {
      t.kind = Token::Kind::End;
      return t;
    }
    char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      long v = 0;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        v = v * 10 + (text_[pos_] - '0');
        if (v > 100000000) throw ParseError("label too large", line_, col_);
        advance();
      }
      t.kind = Token::Kind::Number;
      t.value = v;
      return t;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::string s;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        s.push_back(text_[pos_]);
        advance();
      }
      t.kind = Token::Kind::Ident;
      t.text = s;
      return t;
    }
    advance();
    switch (c) {
      case '{': t.kind = Token::Kind::LBrace; return t;
      case '}': t.kind = Token::Kind::RBrace; return t;
      case '(': t.kind = Token::Kind::LParen; return t;
      case ')': t.kind = Token::Kind::RParen; return t;
      case ',': t.kind = Token::Kind::Comma; return t;
      case '=': t.kind = Token::Kind::Equals; return t;
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", t.line, t.col);
    }
  }

 private:
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }
  void skip_ws() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }
  const std::string& text_;
  size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

// A port is one end of an edge segment prior to joint resolution.
struct Port {
  enum class Kind { Slot, End, Joint };
  Kind kind;
  NodeId node = -1;
  int slot = -1;
  int compass = -1;
  int joint = -1;
  int side = -1;
};

struct Occurrence {
  Port port;
  int line, col;
};

class Parser {
 public:
  explicit Parser(const std::string& text, Options options)
      : lexer_(text), options_(options) {
    tok_ = lexer_.next();
  }

  Diagram run() {
    Token head = expect_ident("diagram mode (link, tangle or graph8)");
    if (head.text == "link")
      mode_ = Mode::Link;
    else if (head.text == "tangle")
      mode_ = Mode::Tangle;
    else if (head.text == "graph8")
      mode_ = Mode::Graph8;
    else
      throw ParseError("unknown diagram mode '" + head.text + "'", head.line, head.col);
    expect(Token::Kind::LBrace, "'{'");
    while (tok_.kind != Token::Kind::RBrace) parse_item();
    expect(Token::Kind::RBrace, "'}'");
    if (tok_.kind != Token::Kind::End)
      throw ParseError("trailing input after '}'", tok_.line, tok_.col);
    return assemble();
  }

 private:
  Token expect(Token::Kind kind, const char* what) {
    if (tok_.kind != kind)
      throw ParseError(std::string("expected ") + what, tok_.line, tok_.col);
    Token t = tok_;
    tok_ = lexer_.next();
    return t;
  }
  Token expect_ident(const char* what) { return expect(Token::Kind::Ident, what); }
  long expect_number() { return expect(Token::Kind::Number, "a label").value; }

  void add_occurrence(long label, Port port, int line, int col) {
    occurrences_[label].push_back({port, line, col});
  }

  void parse_item() {
    Token item = expect_ident("an item (X, A, O, V or ends)");
    if (item.text == "X" || item.text == "V") {
      bool vertex = item.text == "V";
      if (vertex && mode_ != Mode::Graph8)
        throw ParseError("vertex item V(...) is only allowed in graph8 mode", item.line,
                         item.col);
      NodeId n = static_cast<NodeId>(node_kinds_.size());
      node_kinds_.push_back(vertex ? NodeKind::GraphVertex : NodeKind::Crossing);
      if (vertex && ++vertex_count_ > 1)
        throw ParseError("graph8 mode allows exactly one vertex item", item.line, item.col);
      expect(Token::Kind::LParen, "'('");
      for (int s = 0; s < 4; ++s) {
        if (s) expect(Token::Kind::Comma, "','");
        Token num = tok_;
        long label = expect_number();
        Port p;
        p.kind = Port::Kind::Slot;
        p.node = n;
        p.slot = s;
        add_occurrence(label, p, num.line, num.col);
      }
      expect(Token::Kind::RParen, "')'");
    } else if (item.text == "A") {
      int j = joint_count_++;
      expect(Token::Kind::LParen, "'('");
      for (int side = 0; side < 2; ++side) {
        if (side) expect(Token::Kind::Comma, "','");
        Token num = tok_;
        long label = expect_number();
        Port p;
        p.kind = Port::Kind::Joint;
        p.joint = j;
        p.side = side;
        add_occurrence(label, p, num.line, num.col);
      }
      expect(Token::Kind::RParen, "')'");
    } else if (item.text == "O") {
      expect(Token::Kind::LParen, "'('");
      Token num = tok_;
      long label = expect_number();
      loop_labels_.push_back({label, num.line, num.col});
      expect(Token::Kind::RParen, "')'");
    } else if (item.text == "ends") {
      if (mode_ != Mode::Tangle)
        throw ParseError("ends(...) is only allowed in tangle mode", item.line, item.col);
      if (saw_ends_)
        throw ParseError("duplicate ends(...) declaration", item.line, item.col);
      saw_ends_ = true;
      expect(Token::Kind::LParen, "'('");
      bool have[4] = {false, false, false, false};
      for (int k = 0; k < 4; ++k) {
        if (k) expect(Token::Kind::Comma, "','");
        Token key = expect_ident("a compass key (nw, ne, se or sw)");
        int compass = -1;
        for (int c = 0; c < 4; ++c)
          if (key.text == compass_name(c)) compass = c;
        if (compass < 0)
          throw ParseError("unknown compass key '" + key.text + "'", key.line, key.col);
        if (have[compass])
          throw ParseError("duplicate compass key '" + key.text + "'", key.line, key.col);
        have[compass] = true;
        expect(Token::Kind::Equals, "'='");
        Token num = tok_;
        long label = expect_number();
        Port p;
        p.kind = Port::Kind::End;
        p.compass = compass;
        add_occurrence(label, p, num.line, num.col);
      }
      expect(Token::Kind::RParen, "')'");
    } else {
      throw ParseError("unknown item '" + item.text + "'", item.line, item.col);
    }
  }

  Attach port_attach(const Port& p) const {
    if (p.kind == Port::Kind::Slot) return Attach::at_slot(p.node, p.slot);
    return Attach::at_end(p.compass);
  }

  Diagram assemble() {
    if (mode_ == Mode::Tangle && !saw_ends_)
      throw ParseError("tangle mode requires an ends(...) declaration", 1, 1);

    for (const auto& [label, lc0, lc1] : loop_labels_) {
      auto it = occurrences_.find(label);
      if (it != occurrences_.end())
        throw ParseError("label " + std::to_string(label) +
                             " of a free loop is used elsewhere",
                         lc0, lc1);
    }
    for (const auto& [label, occs] : occurrences_) {
      if (occs.size() != 2)
        throw ParseError("label " + std::to_string(label) + " is used " +
                             std::to_string(occs.size()) + " times (expected 2)",
                         occs.front().line, occs.front().col);
    }

    // Resolve A-joints: each segment (label) links two ports; joints are
    // 2-valent and get smoothed away.  Chains between terminal ports become
    // edges; pure joint cycles become free loops.
    DiagramBuilder builder;
    for (NodeKind kind : node_kinds_) {
      if (kind == NodeKind::Crossing)
        builder.add_crossing(1);  // PD convention: over-strand in slots 1 and 3
      else
        builder.add_vertex();
    }

    std::map<long, bool> segment_used;
    // joint side -> the segment (label) incident there
    std::vector<std::array<long, 2>> joint_segments(joint_count_, {-1, -1});
    for (const auto& [label, occs] : occurrences_) {
      segment_used[label] = false;
      for (const Occurrence& o : occs) {
        if (o.port.kind == Port::Kind::Joint) {
          long& cell = joint_segments[o.port.joint][o.port.side];
          if (cell != -1)
            throw ParseError("arc side used twice", o.line, o.col);
          cell = label;
        }
      }
    }
    for (int j = 0; j < joint_count_; ++j)
      for (int side = 0; side < 2; ++side)
        if (joint_segments[j][side] == -1)
          throw ParseError("internal arc bookkeeping error", 1, 1);

    auto other_occurrence = [&](long label, const Port& from) -> const Occurrence& {
      const auto& occs = occurrences_.at(label);
      // Two occurrences; find the one that is not `from` (by identity of fields).
      const Port& a = occs[0].port;
      bool first_is_from = a.kind == from.kind && a.node == from.node &&
                           a.slot == from.slot && a.compass == from.compass &&
                           a.joint == from.joint && a.side == from.side;
      return first_is_from ? occs[1] : occs[0];
    };

    // Walk chains starting from terminal ports, in deterministic label order.
    for (const auto& [label, occs] : occurrences_) {
      if (segment_used[label]) continue;
      if (occs[0].port.kind == Port::Kind::Joint && occs[1].port.kind == Port::Kind::Joint)
        continue;  // picked up by a chain or a joint cycle below
      const Occurrence& start = occs[0].port.kind != Port::Kind::Joint ? occs[0] : occs[1];
      Port a = start.port;
      long seg = label;
      segment_used[seg] = true;
      Port b = other_occurrence(seg, a).port;
      while (b.kind == Port::Kind::Joint) {
        seg = joint_segments[b.joint][1 - b.side];
        if (segment_used[seg])
          throw ParseError("internal arc chain error", start.line, start.col);
        segment_used[seg] = true;
        Port hop;
        hop.kind = Port::Kind::Joint;
        hop.joint = b.joint;
        hop.side = 1 - b.side;
        b = other_occurrence(seg, hop).port;
      }
      builder.add_edge(port_attach(a), port_attach(b));
    }
    // Remaining segments are pure joint cycles: each cycle is one free loop.
    for (const auto& [label, occs] : occurrences_) {
      if (segment_used[label]) continue;
      long seg = label;
      Port at = occs[0].port;  // a joint port of seg
      while (!segment_used[seg]) {
        segment_used[seg] = true;
        Port far = other_occurrence(seg, at).port;
        Port hop;
        hop.kind = Port::Kind::Joint;
        hop.joint = far.joint;
        hop.side = 1 - far.side;
        seg = joint_segments[far.joint][1 - far.side];
        at = hop;
      }
      builder.add_free_loop();
    }
    for (size_t i = 0; i < loop_labels_.size(); ++i) builder.add_free_loop();

    return builder.build(mode_, options_);
  }

  Lexer lexer_;
  Options options_;
  Token tok_;
  Mode mode_ = Mode::Link;
  std::vector<NodeKind> node_kinds_;
  int vertex_count_ = 0;
  int joint_count_ = 0;
  bool saw_ends_ = false;
  std::map<long, std::vector<Occurrence>> occurrences_;
  std::vector<std::tuple<long, int, int>> loop_labels_;
};

}  // namespace

Diagram parse(const std::string& text, Options options) {
  Parser p(text, options);
  return p.run();
}

}  // namespace tanglekit
