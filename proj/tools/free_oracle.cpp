// Reference word-problem oracle for free groups speaking the line protocol:
// one word per line on stdin (space-separated generator tokens, a capitalized
// token is the inverse), one verdict per line on stdout.
#include <cctype>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

int main() {
  std::string line;
  while (std::getline(std::cin, line)) {
    std::istringstream in(line);
    std::string tok;
    std::vector<std::string> stack;
    while (in >> tok) {
      std::string flipped = tok;
      flipped[0] = std::isupper((unsigned char)flipped[0])
                       ? (char)std::tolower((unsigned char)flipped[0])
                       : (char)std::toupper((unsigned char)flipped[0]);
      if (!stack.empty() && stack.back() == flipped)
        stack.pop_back();
      else
        stack.push_back(tok);
    }
    std::cout << (stack.empty() ? "trivial" : "nontrivial") << std::endl;
  }
  return 0;
}
