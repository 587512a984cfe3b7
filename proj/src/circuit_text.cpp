// Copyright 2026 The Lightcone Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <numbers>

#include "lightcone/circuit.hpp"
#include "lightcone/error.hpp"
#include "text_cursor.hpp"

namespace lightcone {

namespace {

using detail::TextCursor;

// Affine expressions over at most one symbol:
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := number | 'pi' | symbol | '(' expr ')' | '-' factor
class AngleParser {
   public:
    explicit AngleParser(TextCursor &cur) : cur_(cur) {
    }

    Angle expr() {
        Angle acc = term();
        while (true) {
            if (cur_.consume('+')) {
                acc = sum(acc, term());
            } else if (cur_.peek() == '-') {
                cur_.consume('-');
                acc = sum(acc, term().negated());
            } else {
                return acc;
            }
        }
    }

   private:
    Angle sum(const Angle &a, const Angle &b) {
        auto s = add_angles(a, b);
        if (!s) {
            cur_.fail("angle expression mixes symbols '" + a.symbol + "' and '" + b.symbol + "'");
        }
        return *s;
    }

    Angle term() {
        Angle acc = factor();
        while (true) {
            if (cur_.consume('*')) {
                Angle rhs = factor();
                if (acc.is_literal()) {
                    acc = rhs.scaled(acc.offset);
                } else if (rhs.is_literal()) {
                    acc = acc.scaled(rhs.offset);
                } else {
                    cur_.fail("angle expression must be affine in one symbol");
                }
            } else if (cur_.consume('/')) {
                Angle rhs = factor();
                if (!rhs.is_literal() || rhs.offset == 0.0) {
                    cur_.fail("division needs a nonzero literal divisor");
                }
                acc = acc.scaled(1.0 / rhs.offset);
            } else {
                return acc;
            }
        }
    }

    Angle factor() {
        if (cur_.consume('-')) {
            return factor().negated();
        }
        if (cur_.consume('+')) {
            return factor();
        }
        if (cur_.consume('(')) {
            Angle inner = expr();
            cur_.expect(')');
            return inner;
        }
        if (cur_.at_number()) {
            return Angle::literal(cur_.number());
        }
        std::string name = cur_.identifier();
        if (name == "pi") {
            return Angle::literal(std::numbers::pi);
        }
        return Angle::param(name);
    }

    TextCursor &cur_;
};

}  // namespace

std::string serialize(const Circuit &circuit) {
    std::string out = "qubits " + std::to_string(circuit.n_qubits()) + "\n";
    for (const Gate &g : circuit.gates()) {
        out += to_string(g);
        out += "\n";
    }
    return out;
}

Circuit parse_circuit(std::string_view text) {
    std::optional<std::size_t> n_qubits;
    std::vector<Gate> gates;
    std::size_t line_number = 0;
    while (!text.empty()) {
        auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        ++line_number;
        TextCursor cur(detail::strip_comment(line), line_number);
        if (cur.at_end()) {
            continue;
        }
        std::size_t name_col = cur.column();
        std::string word = cur.identifier();
        if (!n_qubits) {
            if (word != "qubits") {
                throw ParseError("expected header 'qubits N'", line_number, name_col);
            }
            std::size_t n = cur.integer();
            if (n == 0) {
                cur.fail("qubit count must be positive");
            }
            n_qubits = n;
            if (!cur.at_end()) {
                cur.fail("unexpected text after header");
            }
            continue;
        }
        for (char &c : word) {
            c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
        }
        auto kind = gate_kind_from_name(word);
        if (!kind) {
            throw ParseError("unknown gate '" + word + "'", line_number, name_col);
        }
        Gate g{*kind, {0, 0}, {}};
        if (gate_has_angle(*kind)) {
            cur.expect('(');
            g.angle = AngleParser(cur).expr();
            cur.expect(')');
        }
        for (std::size_t k = 0; k < gate_arity(*kind); ++k) {
            std::size_t col = cur.column();
            std::size_t q = cur.integer();
            if (q >= *n_qubits) {
                throw ParseError("qubit " + std::to_string(q) + " out of range for " + std::to_string(*n_qubits) +
                                     " qubits",
                                 line_number, col + 1);
            }
            g.qubits[k] = static_cast<Qubit>(q);
        }
        if (!cur.at_end()) {
            cur.fail("unexpected text after gate");
        }
        if (g.arity() == 2 && g.qubits[0] == g.qubits[1]) {
            throw ParseError("two-qubit gate needs distinct qubits", line_number, name_col);
        }
        gates.push_back(std::move(g));
    }
    if (!n_qubits) {
        throw ParseError("missing header 'qubits N'", line_number == 0 ? 1 : line_number, 1);
    }
    return Circuit(*n_qubits, std::move(gates));
}

}  // namespace lightcone
