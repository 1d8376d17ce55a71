package jsonparser

import "fmt"

type TokenKind int

const (
	KindObjectOpen TokenKind = iota
	KindObjectClose
	KindArrayOpen
	KindArrayClose
	KindString
	KindNumber
)

type Lexer struct {
	input  []byte
	offset int
}

func (lex *Lexer) NextToken() (TokenKind, []byte, error) {
	lex.skipWhitespace()
	if lex.offset >= len(lex.input) {
		return 0, nil, fmt.Errorf("unexpected end of input at %d", lex.offset)
	}
	switch lex.input[lex.offset] {
	case '{':
		lex.offset++
		return KindObjectOpen, nil, nil
	case '}':
		lex.offset++
		return KindObjectClose, nil, nil
	}
	return lex.scanValue()
}

func (lex *Lexer) skipWhitespace() {
	for lex.offset < len(lex.input) && lex.input[lex.offset] == ' ' {
		lex.offset++
	}
}

func (lex *Lexer) scanValue() (TokenKind, []byte, error) {
	start := lex.offset
	for lex.offset < len(lex.input) && lex.input[lex.offset] != ',' {
		lex.offset++
	}
	return KindString, lex.input[start:lex.offset], nil
}
