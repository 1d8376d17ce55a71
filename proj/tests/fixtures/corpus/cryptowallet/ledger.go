package cryptowallet

import "crypto/sha256"

type Transaction struct {
	Sender    string
	Recipient string
	Amount    uint64
	Nonce     uint64
}

func (tx *Transaction) Hash() [32]byte {
	buffer := append([]byte(tx.Sender), []byte(tx.Recipient)...)
	for shift := 0; shift < 64; shift += 8 {
		buffer = append(buffer, byte(tx.Amount>>shift), byte(tx.Nonce>>shift))
	}
	return sha256.Sum256(buffer)
}

type Ledger struct {
	balances map[string]uint64
}

func NewLedger() *Ledger {
	return &Ledger{balances: make(map[string]uint64)}
}

func (ledger *Ledger) ApplyTransaction(tx *Transaction) bool {
	if ledger.balances[tx.Sender] < tx.Amount {
		return false
	}
	ledger.balances[tx.Sender] -= tx.Amount
	ledger.balances[tx.Recipient] += tx.Amount
	return true
}

func (ledger *Ledger) BalanceOf(address string) uint64 {
	return ledger.balances[address]
}
