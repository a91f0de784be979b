#include "case_study.hpp"

#include <fstream>
#include <regex>
#include <sstream>
#include <stdexcept>

#include "anacon/cl_syntax.hpp"
#include "anacon/restricted_english.hpp"

namespace anacon::testing {

const std::vector<CaseStudyItem>& case_study_items() {
  static const std::vector<CaseStudyItem> items = {
      {1,
       "( If (two_hours_before_the_flight_leaves) then (It is mandatory to "
       "(open_the_check_in_desk_and_request_the_passenger_manifest) if not "
       "(open_the_check_in_desk_and_request_the_passenger_manifest) then (It is "
       "mandatory to (pay_a_fine))  ) )",
       "( [ ( two_hours_before_the_flight_leaves ) ] ( O ( open_the_check_in_desk "
       "& request_the_passenger_manifest ) _ ( O ( pay_a_fine ) ) ) )",
       {}},
      {2,
       "( (When) ( If (opening_the_desk_with_the_passenger_manifest) then (It is "
       "mandatory to (reply_to_the_passenger_manifest_request) if not "
       "(reply_to_the_passenger_manifest_request) then (It is mandatory to "
       "(pay_a_fine))) ))",
       "( [ 1 * ] ( [ ( opening_the_desk_with_the_passenger_manifest ) ] ( O ( "
       "reply_to_the_passenger_manifest_request ) _ ( O ( pay_a_fine ) ) ) ) )",
       {}},
      {3,
       "(((After) (If (open_the_check_in_desk) then (It is mandatory to "
       "(check_that_the_passport_details_match_what_is_written_on_the_ticket_and_"
       "check_the_luggage_is_within_the_weight_limits) if not "
       "(check_that_the_passport_details_match_what_is_written_on_the_ticket_and_"
       "check_the_luggage_is_within_the_weight_limits) then (It is mandatory to "
       "(pay))))) and (If "
       "(check_that_the_passport_details_match_what_is_written_on_the_ticket_and_"
       "check_the_luggage_is_within_the_weight_limits) then (It is mandatory to "
       "(issue_the_boarding_pass) if not (issue_the_boarding_pass) then (It is "
       "mandatory to (pay_a_fine)) ) ) )",
       "(( [ 1 * ] ([(open_the_check_in_desk ) ] (O "
       "(check_that_the_passport_details_match_what_is_written_on_the_ticket & "
       "check_the_luggage_is_within_the_weight_limits) _ (O (pay_a_fine ))))) "
       "\xE2\x88\xA7 ([( "
       "check_that_the_passport_details_match_what_is_written_on_the_ticket & "
       "check_the_luggage_is_within_the_weight_limits) ] (O "
       "(issue_the_boarding_pass) _ (O (pay_a_fine )))))",
       {{"pay", "pay_a_fine"}}},
      {4,
       "( If (the_luggage_weighs_more_than_the_limit) then (It is mandatory to "
       "(collect_payment_for_the_extra_weight_and_issue_the_boarding_pass ) if "
       "not (collect_payment_for_the_extra_weight_and_issue_the_boarding_pass ) "
       "then (It is mandatory to (pay_a_fine))) )",
       "( [ ( the_luggage_weighs_more_than_the_limit ) ] ( O ( "
       "collect_payment_for_the_extra_weight & issue_the_boarding_pass ) _ ( O ( "
       "pay_a_fine ) ) ) )",
       {}},
      {5,
       "(It is mandatory to (inspect_that_the_details_are_correct_beforehand) if "
       "not (inspect_that_the_details_are_correct_beforehand) then (It is "
       "prohibited to (issue_any_boarding_cards) if (issue_any_boarding_cards) "
       "then (It is mandatory to (pay_a_fine))) )",
       "( O ( inspect_that_the_details_are_correct_beforehand ) _ ( F ( "
       "issue_the_boarding_pass ) _ ( O ( pay_a_fine ) ) ) )",
       {{"issue_any_boarding_cards", "issue_the_boarding_pass"}}},
      {6,
       "( (Before) (If (open_the_check_in_desk) then (It is prohibited to "
       "(issue_any_boarding_cards) if (issue_any_boarding_cards) then (It is "
       "mandatory to (pay_a_fine))  )  )  )",
       "( [ 1 * ] ( [ ( open_the_check_in_desk ) ] ( F ( issue_the_boarding_pass "
       ") _ ( O ( pay_a_fine ) ) ) ) )",
       {{"issue_any_boarding_cards", "issue_the_boarding_pass"}}},
      {7,
       "( (Before) (If (20_minutes_the_flight_is_due_to_leave_and_not_before)  "
       "then (It is mandatory to (close_the_check_in_desk) if not "
       "(close_the_check_in_desk) then (It is mandatory to (pay_a_fine))  )  )  )",
       "( [ 1 * ] ( [ ( 20_minutes_the_flight_is_due_to_leave_and_not_before ) ] "
       "( O ( close_the_check_in_desk ) _ ( O ( pay_a_fine ) ) ) ) )",
       {}},
      {8,
       "( (After) (If (close_the_check_in_desk) then (It is mandatory to "
       "(send_the_luggage_information_to_airline) if not "
       "(send_the_luggage_information_to_airline) then (It is mandatory to "
       "(pay_a_fine))  )  )  )",
       "( [ 1 * ] ( [ ( close_the_check_in_desk ) ] ( O ( "
       "send_the_luggage_information_to_airline ) _ ( O ( pay_a_fine ) ) ) ) )",
       {}},
      {9,
       "( (Always) (If (close_the_check_in_desk)  then (It is prohibited to "
       "(issue_any_boarding_pass_or_open_the_check_in_desk) if "
       "(issue_any_boarding_pass_or_open_the_check_in_desk) then (It is "
       "mandatory to (pay_a_fine))  )  )  )",
       "( [ 1 * ] ( [ ( close_the_check_in_desk ) ] ( F ( issue_the_boarding_pass "
       "+ open_the_check_in_desk ) _ ( O ( pay_a_fine ) ) ) ) )",
       {{"issue_any_boarding_pass", "issue_the_boarding_pass"}}},
  };
  return items;
}

const std::set<std::string>& case_study_lexicon() {
  static const std::set<std::string> lex = {
      "two_hours_before_the_flight_leaves",
      "open_the_check_in_desk",
      "request_the_passenger_manifest",
      "pay_a_fine",
      "opening_the_desk_with_the_passenger_manifest",
      "reply_to_the_passenger_manifest_request",
      "check_that_the_passport_details_match_what_is_written_on_the_ticket",
      "check_the_luggage_is_within_the_weight_limits",
      "issue_the_boarding_pass",
      "the_luggage_weighs_more_than_the_limit",
      "collect_payment_for_the_extra_weight",
      "inspect_that_the_details_are_correct_beforehand",
      "20_minutes_the_flight_is_due_to_leave_and_not_before",
      "close_the_check_in_desk",
      "send_the_luggage_information_to_airline",
  };
  return lex;
}

std::string respace_cl(const std::string& text) {
  std::string s = std::regex_replace(text, std::regex("\xE2\x88\xA7"), " ^ ");
  s = std::regex_replace(s, std::regex(R"(\(\+\))"), " \x01 ");
  s = std::regex_replace(s, std::regex(R"(_\|_)"), " \x02 ");
  s = std::regex_replace(s, std::regex(R"(([()\[\]&+.*!^]))"), " $1 ");
  s = std::regex_replace(s, std::regex(R"(\s+)"), " ");
  s = std::regex_replace(s, std::regex("\x01"), "(+)");
  s = std::regex_replace(s, std::regex("\x02"), "_|_");
  s = std::regex_replace(s, std::regex(R"(^ | $)"), "");
  return s;
}

Clause translate_item_ast(const CaseStudyItem& item) {
  EnglishParseOptions opts;
  opts.lexicon = &case_study_lexicon();
  Clause c = parse_re(item.english, opts);
  return rename_actions(c, [&](const AtomicAction& a) {
    auto it = item.renames.find(a.name());
    return it == item.renames.end() ? a : AtomicAction(it->second);
  });
}

std::string translate_item(const CaseStudyItem& item) {
  return print_cl(translate_item_ast(item));
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace anacon::testing
